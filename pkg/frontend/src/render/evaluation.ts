// Evaluation view: ranked topic table (scores to 3 decimals, as in the
// batch CLI) plus a separate section for topics whose backend call failed.

import { escapeHtml } from '../highlight.js'
import type { EvaluateResponse } from '../types.js'

export function renderEvaluation(response: EvaluateResponse): string {
  const rows = response.rows
    .map(
      (row, index) =>
        '<tr>' +
        `<td class="num">${index + 1}</td>` +
        `<td>${escapeHtml(row.topic_id)}</td>` +
        `<td class="num" data-testid="score-${escapeHtml(row.topic_id)}">${row.bleu.toFixed(3)}</td>` +
        '</tr>',
    )
    .join('')
  const table =
    response.rows.length === 0
      ? '<p class="muted" data-testid="empty-evaluation">no rows</p>'
      : '<table class="ranking" data-testid="ranking">' +
        '<thead><tr><th>#</th><th>topic</th><th>score</th></tr></thead>' +
        `<tbody>${rows}</tbody></table>`
  const failed =
    response.failed.length === 0
      ? ''
      : '<section class="failed" data-testid="failed"><h4>Failed topics</h4><ul>' +
        response.failed.map((topic) => `<li>${escapeHtml(topic)}</li>`).join('') +
        '</ul></section>'
  return table + failed
}
