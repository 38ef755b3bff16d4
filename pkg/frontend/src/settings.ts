// User-configurable settings, persisted across page reloads.

export interface UiSettings {
  backendId: string
  metrics: string[]
  diagnostics: boolean
  language: 'nl' | 'en'
  topK: number
}

export const DEFAULT_SETTINGS: UiSettings = {
  backendId: '',
  metrics: ['flesch_douma', 'flesch_kincaid_grade'],
  diagnostics: true,
  language: 'nl',
  topK: 5,
}

export interface StorageLike {
  getItem(key: string): string | null
  setItem(key: string, value: string): void
}

const STORAGE_KEY = 'artist.ui.settings'

export class SettingsStore {
  constructor(private readonly storage: StorageLike) {}

  load(): UiSettings {
    const raw = this.storage.getItem(STORAGE_KEY)
    if (!raw) return { ...DEFAULT_SETTINGS, metrics: [...DEFAULT_SETTINGS.metrics] }
    try {
      const parsed = JSON.parse(raw) as Partial<UiSettings>
      return {
        backendId: typeof parsed.backendId === 'string' ? parsed.backendId : DEFAULT_SETTINGS.backendId,
        metrics: Array.isArray(parsed.metrics)
          ? parsed.metrics.filter((m): m is string => typeof m === 'string')
          : [...DEFAULT_SETTINGS.metrics],
        diagnostics:
          typeof parsed.diagnostics === 'boolean' ? parsed.diagnostics : DEFAULT_SETTINGS.diagnostics,
        language: parsed.language === 'en' ? 'en' : 'nl',
        topK:
          typeof parsed.topK === 'number' && Number.isInteger(parsed.topK) && parsed.topK >= 1
            ? parsed.topK
            : DEFAULT_SETTINGS.topK,
      }
    } catch {
      return { ...DEFAULT_SETTINGS, metrics: [...DEFAULT_SETTINGS.metrics] }
    }
  }

  save(settings: UiSettings): void {
    this.storage.setItem(STORAGE_KEY, JSON.stringify(settings))
  }

  /** Keep only backends the service actually reports; fall back to the first. */
  restrictToBackends(settings: UiSettings, available: string[]): UiSettings {
    if (available.length === 0) return { ...settings, backendId: '' }
    if (available.includes(settings.backendId)) return settings
    return { ...settings, backendId: available[0] }
  }
}
