// Word-level diff between source and simplified text (LCS based). The
// paper-style failure cases are word substitutions, so word granularity is
// what the reviewer needs to see.

export type DiffKind = 'equal' | 'removed' | 'added'

export interface DiffSegment {
  kind: DiffKind
  text: string
}

function splitWords(text: string): string[] {
  return text.split(/\s+/).filter((w) => w.length > 0)
}

export function diffWords(source: string, simplified: string): DiffSegment[] {
  const a = splitWords(source)
  const b = splitWords(simplified)
  const n = a.length
  const m = b.length
  // LCS table; fine for paragraph-sized inputs.
  const lcs: number[][] = Array.from({ length: n + 1 }, () => new Array(m + 1).fill(0))
  for (let i = n - 1; i >= 0; i--) {
    for (let j = m - 1; j >= 0; j--) {
      lcs[i][j] = a[i] === b[j] ? lcs[i + 1][j + 1] + 1 : Math.max(lcs[i + 1][j], lcs[i][j + 1])
    }
  }
  const segments: DiffSegment[] = []
  const push = (kind: DiffKind, word: string) => {
    const last = segments[segments.length - 1]
    if (last && last.kind === kind) {
      last.text += ` ${word}`
    } else {
      segments.push({ kind, text: word })
    }
  }
  let i = 0
  let j = 0
  while (i < n && j < m) {
    if (a[i] === b[j]) {
      push('equal', a[i])
      i++
      j++
    } else if (lcs[i + 1][j] >= lcs[i][j + 1]) {
      push('removed', a[i])
      i++
    } else {
      push('added', b[j])
      j++
    }
  }
  while (i < n) push('removed', a[i++])
  while (j < m) push('added', b[j++])
  return segments
}
