import { describe, expect, it } from 'vitest'

import { DEFAULT_SETTINGS, SettingsStore, type StorageLike, type UiSettings } from '../src/settings'

class MemoryStorage implements StorageLike {
  private data = new Map<string, string>()
  getItem(key: string): string | null {
    return this.data.has(key) ? (this.data.get(key) as string) : null
  }
  setItem(key: string, value: string): void {
    this.data.set(key, value)
  }
}

describe('SettingsStore', () => {
  it('round-trips settings through storage', () => {
    const storage = new MemoryStorage()
    const store = new SettingsStore(storage)
    const settings: UiSettings = {
      backendId: 'dutch_t5',
      metrics: ['smog', 'spache'],
      diagnostics: false,
      language: 'en',
      topK: 7,
    }
    store.save(settings)
    expect(store.load()).toEqual(settings)
  })

  it('survives a reload cycle on a fresh store over the same storage', () => {
    const storage = new MemoryStorage()
    const first = new SettingsStore(storage)
    first.save({ ...DEFAULT_SETTINGS, backendId: 'mock', topK: 9 })
    const second = new SettingsStore(storage)
    expect(second.load().backendId).toBe('mock')
    expect(second.load().topK).toBe(9)
  })

  it('returns defaults when storage is empty', () => {
    const store = new SettingsStore(new MemoryStorage())
    expect(store.load()).toEqual(DEFAULT_SETTINGS)
  })

  it('falls back to defaults on corrupt or partial payloads', () => {
    const storage = new MemoryStorage()
    storage.setItem('artist.ui.settings', 'not json at all')
    expect(new SettingsStore(storage).load()).toEqual(DEFAULT_SETTINGS)

    storage.setItem('artist.ui.settings', JSON.stringify({ topK: -3, metrics: 'nope' }))
    const loaded = new SettingsStore(storage).load()
    expect(loaded.topK).toBe(DEFAULT_SETTINGS.topK)
    expect(loaded.metrics).toEqual(DEFAULT_SETTINGS.metrics)
  })

  it('only offers backends reported by the service', () => {
    const store = new SettingsStore(new MemoryStorage())
    const settings = { ...DEFAULT_SETTINGS, backendId: 'gone' }
    expect(store.restrictToBackends(settings, ['mock', 'dutch_t5']).backendId).toBe('mock')
    expect(store.restrictToBackends({ ...settings, backendId: 'dutch_t5' }, ['mock', 'dutch_t5']).backendId).toBe('dutch_t5')
    expect(store.restrictToBackends(settings, []).backendId).toBe('')
  })
})
