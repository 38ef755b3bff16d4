// HTML helpers: escaping and span highlighting over raw text.

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;')
    .replace(/'/g, '&#39;')
}

export interface HighlightSpan {
  start: number
  end: number
  cls: string
  title: string
}

/** Wrap the given character spans of `text` in <mark> elements. Overlaps are
 * resolved by keeping the earlier span. */
export function highlightSpans(text: string, spans: HighlightSpan[]): string {
  const ordered = [...spans]
    .filter((s) => s.start >= 0 && s.end > s.start && s.end <= text.length)
    .sort((x, y) => x.start - y.start || x.end - y.end)
  const parts: string[] = []
  let cursor = 0
  for (const span of ordered) {
    if (span.start < cursor) continue
    parts.push(escapeHtml(text.slice(cursor, span.start)))
    parts.push(
      `<mark class="${span.cls}" title="${escapeHtml(span.title)}">` +
        escapeHtml(text.slice(span.start, span.end)) +
        '</mark>',
    )
    cursor = span.end
  }
  parts.push(escapeHtml(text.slice(cursor)))
  return parts.join('')
}
