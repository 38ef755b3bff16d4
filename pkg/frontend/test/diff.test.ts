import { describe, expect, it } from 'vitest'

import { diffWords } from '../src/diff'

describe('diffWords', () => {
  it('reports identical texts as one equal segment', () => {
    expect(diffWords('de kat zit', 'de kat zit')).toEqual([{ kind: 'equal', text: 'de kat zit' }])
  })

  it('marks a single word substitution', () => {
    const segments = diffWords('congres in 1915.', 'congres in 2015.')
    expect(segments).toEqual([
      { kind: 'equal', text: 'congres in' },
      { kind: 'removed', text: '1915.' },
      { kind: 'added', text: '2015.' },
    ])
  })

  it('marks dropped words', () => {
    const segments = diffWords('de oude molen draait', 'de molen draait')
    expect(segments).toEqual([
      { kind: 'equal', text: 'de' },
      { kind: 'removed', text: 'oude' },
      { kind: 'equal', text: 'molen draait' },
    ])
  })

  it('marks inserted words', () => {
    const segments = diffWords('de molen', 'de grote molen')
    expect(segments).toEqual([
      { kind: 'equal', text: 'de' },
      { kind: 'added', text: 'grote' },
      { kind: 'equal', text: 'molen' },
    ])
  })

  it('groups consecutive changes', () => {
    const segments = diffWords('a b c d', 'x y c d')
    expect(segments).toEqual([
      { kind: 'removed', text: 'a b' },
      { kind: 'added', text: 'x y' },
      { kind: 'equal', text: 'c d' },
    ])
  })

  it('handles whitespace-only inputs', () => {
    expect(diffWords('   ', '')).toEqual([])
  })
})
