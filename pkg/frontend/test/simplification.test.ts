import { describe, expect, it } from 'vitest'

import { renderError, renderSimplification } from '../src/render/simplification'
import type { SimplifyResponse } from '../src/types'

// Stubbed service response for the classic failure: a date mutated by the
// backend, flagged by diagnostics with spans into both texts.
const SOURCE = 'Het congres was in 1915.'
const SIMPLIFIED = 'Het congres was in 2015.'

const MUTATION_RESPONSE: SimplifyResponse = {
  result: {
    source: SOURCE,
    simplified: SIMPLIFIED,
    backend_id: 'dutch_t5',
    stage_outputs: [],
    substitutions: [],
    considered: [],
    latency_ms: 12,
  },
  source_report: {
    language: 'nl',
    text_scores: { flesch_douma: 110.25 },
    sentence_scores: null,
    warnings: [],
  },
  simplified_report: {
    language: 'nl',
    text_scores: { flesch_douma: 110.25 },
    sentence_scores: null,
    warnings: [],
  },
  findings: [
    {
      check_id: 'number_mutation',
      severity: 'error',
      message: 'number changed: 1915 became 2015',
      source_span: [SOURCE.indexOf('1915'), SOURCE.indexOf('1915') + 4],
      simplified_span: [SIMPLIFIED.indexOf('2015'), SIMPLIFIED.indexOf('2015') + 4],
    },
  ],
}

describe('renderSimplification', () => {
  it('renders the word diff for the mutated date', () => {
    const html = renderSimplification(MUTATION_RESPONSE)
    expect(html).toContain('<span class="diff-removed">1915.</span>')
    expect(html).toContain('<span class="diff-added">2015.</span>')
  })

  it('renders a severity badge for the finding', () => {
    const html = renderSimplification(MUTATION_RESPONSE)
    expect(html).toContain('data-testid="badge-number_mutation"')
    expect(html).toContain('badge-error')
    expect(html).toContain('number changed: 1915 became 2015')
  })

  it('highlights the spans in both panes', () => {
    const html = renderSimplification(MUTATION_RESPONSE)
    expect(html).toContain('<mark class="hl-error" title="number_mutation: number changed: 1915 became 2015">1915</mark>')
    expect(html).toContain('<mark class="hl-error" title="number_mutation: number changed: 1915 became 2015">2015</mark>')
  })

  it('shows readability scores from the reports verbatim', () => {
    const html = renderSimplification(MUTATION_RESPONSE)
    expect(html).toContain('flesch_douma')
    expect(html).toContain('110.25')
  })

  it('renders a no-findings state on clean responses', () => {
    const clean: SimplifyResponse = {
      ...MUTATION_RESPONSE,
      findings: [],
      result: { ...MUTATION_RESPONSE.result, simplified: SOURCE },
    }
    const html = renderSimplification(clean)
    expect(html).toContain('data-testid="no-findings"')
    expect(html).not.toContain('diff-removed')
  })

  it('escapes markup in texts', () => {
    const sneaky: SimplifyResponse = {
      ...MUTATION_RESPONSE,
      findings: [],
      result: {
        ...MUTATION_RESPONSE.result,
        source: '<b>bold</b> tekst',
        simplified: '<b>bold</b> tekst',
      },
    }
    const html = renderSimplification(sneaky)
    expect(html).not.toContain('<b>bold</b>')
    expect(html).toContain('&lt;b&gt;bold&lt;/b&gt;')
  })

  it('renders errors as an inline banner', () => {
    const html = renderError('backend_timeout: no answer within 150 ms')
    expect(html).toContain('error-banner')
    expect(html).toContain('backend_timeout')
  })
})
