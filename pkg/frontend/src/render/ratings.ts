// Rating capture: three 1-5 scales plus the current aggregates, rendered to
// one decimal exactly as served (the UI does not re-round).

import { escapeHtml } from '../highlight.js'
import type { RatingAggregate } from '../types.js'

export const RATING_DIMENSIONS = ['simplicity', 'fluency', 'adequacy'] as const
export type RatingDimension = (typeof RATING_DIMENSIONS)[number]

export interface RatingDraft {
  simplicity: number | null
  fluency: number | null
  adequacy: number | null
}

export const EMPTY_DRAFT: RatingDraft = { simplicity: null, fluency: null, adequacy: null }

export function draftComplete(draft: RatingDraft): boolean {
  return RATING_DIMENSIONS.every((dimension) => {
    const value = draft[dimension]
    return value !== null && value >= 1 && value <= 5
  })
}

function renderScale(dimension: RatingDimension, selected: number | null): string {
  const buttons = [1, 2, 3, 4, 5]
    .map(
      (value) =>
        `<label><input type="radio" name="${dimension}" value="${value}"` +
        `${selected === value ? ' checked' : ''}> ${value}</label>`,
    )
    .join('')
  return `<fieldset class="scale" data-dimension="${dimension}"><legend>${dimension}</legend>${buttons}</fieldset>`
}

export function renderRatingForm(draft: RatingDraft): string {
  const disabled = draftComplete(draft) ? '' : ' disabled'
  return [
    '<form class="rating-form" data-testid="rating-form">',
    renderScale('simplicity', draft.simplicity),
    renderScale('fluency', draft.fluency),
    renderScale('adequacy', draft.adequacy),
    `<button type="submit" data-testid="rating-submit"${disabled}>Submit rating</button>`,
    '</form>',
  ].join('\n')
}

export function renderAggregates(aggregates: RatingAggregate[]): string {
  if (aggregates.length === 0) return '<p class="muted">no ratings yet</p>'
  const rows = aggregates
    .map(
      (aggregate) =>
        '<tr>' +
        `<td>${escapeHtml(aggregate.topic_id)}</td>` +
        `<td>${escapeHtml(aggregate.backend_id || '—')}</td>` +
        `<td class="num">${aggregate.count}</td>` +
        `<td class="num" data-testid="agg-simplicity">${aggregate.display.simplicity.toFixed(1)}</td>` +
        `<td class="num" data-testid="agg-fluency">${aggregate.display.fluency.toFixed(1)}</td>` +
        `<td class="num" data-testid="agg-adequacy">${aggregate.display.adequacy.toFixed(1)}</td>` +
        '</tr>',
    )
    .join('')
  return (
    '<table class="aggregates" data-testid="aggregates">' +
    '<thead><tr><th>topic</th><th>backend</th><th>n</th>' +
    '<th>simplicity</th><th>fluency</th><th>adequacy</th></tr></thead>' +
    `<tbody>${rows}</tbody></table>`
  )
}
