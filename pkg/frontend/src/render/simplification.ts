// Simplification view: side-by-side panes with word diff, span-highlighted
// findings, and readability scores for both texts. Pure: state in, HTML out.

import { diffWords } from '../diff.js'
import { escapeHtml, highlightSpans, type HighlightSpan } from '../highlight.js'
import type { Finding, ReadabilityReport, SimplifyResponse } from '../types.js'

function findingSpans(findings: Finding[], side: 'source' | 'simplified'): HighlightSpan[] {
  return findings.flatMap((finding) => {
    const span = side === 'source' ? finding.source_span : finding.simplified_span
    if (!span) return []
    return [
      {
        start: span[0],
        end: span[1],
        cls: `hl-${finding.severity}`,
        title: `${finding.check_id}: ${finding.message}`,
      },
    ]
  })
}

function renderScores(report: ReadabilityReport | null): string {
  if (!report) return '<p class="muted">no metrics requested</p>'
  const rows = Object.keys(report.text_scores)
    .sort()
    .map(
      (metric) =>
        `<tr><td>${escapeHtml(metric)}</td><td class="num">${report.text_scores[metric].toFixed(2)}</td></tr>`,
    )
  const sentenceRows = (report.sentence_scores ?? []).map(
    ([index, score]) =>
      `<tr><td>spache #${index + 1}</td><td class="num">${score.toFixed(2)}</td></tr>`,
  )
  const warnings = report.warnings
    .map((w) => `<p class="warning-note">${escapeHtml(w)}</p>`)
    .join('')
  return `<table class="scores">${rows.join('')}${sentenceRows.join('')}</table>${warnings}`
}

function renderDiff(source: string, simplified: string): string {
  const segments = diffWords(source, simplified)
  const body = segments
    .map((segment) => {
      if (segment.kind === 'equal') return escapeHtml(segment.text)
      const cls = segment.kind === 'removed' ? 'diff-removed' : 'diff-added'
      return `<span class="${cls}">${escapeHtml(segment.text)}</span>`
    })
    .join(' ')
  return `<div class="diff" data-testid="diff">${body}</div>`
}

function renderFindings(findings: Finding[]): string {
  if (findings.length === 0) {
    return '<p class="muted" data-testid="no-findings">no findings</p>'
  }
  const items = findings
    .map(
      (finding) =>
        '<li class="finding">' +
        `<span class="badge badge-${finding.severity}" data-testid="badge-${finding.check_id}">` +
        `${escapeHtml(finding.check_id)}</span> ` +
        `${escapeHtml(finding.message)}</li>`,
    )
    .join('')
  return `<ul class="findings" data-testid="findings">${items}</ul>`
}

export function renderSimplification(response: SimplifyResponse): string {
  const { result, findings } = response
  const sourceHtml = highlightSpans(result.source, findingSpans(findings, 'source'))
  const simplifiedHtml = highlightSpans(result.simplified, findingSpans(findings, 'simplified'))
  return [
    '<div class="panes">',
    `<section class="pane"><h3>Source</h3><p class="text" data-testid="source-pane">${sourceHtml}</p>`,
    renderScores(response.source_report),
    '</section>',
    `<section class="pane"><h3>Simplified (${escapeHtml(result.backend_id)})</h3>`,
    `<p class="text" data-testid="simplified-pane">${simplifiedHtml}</p>`,
    renderScores(response.simplified_report),
    '</section>',
    '</div>',
    '<h3>Changes</h3>',
    renderDiff(result.source, result.simplified),
    '<h3>Findings</h3>',
    renderFindings(findings),
  ].join('\n')
}

/** Inline error banner; the input text area is left untouched by design. */
export function renderError(message: string): string {
  return `<div class="error-banner" role="alert">${escapeHtml(message)}</div>`
}
