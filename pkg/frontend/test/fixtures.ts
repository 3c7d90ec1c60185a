/** Shared in-memory documents for unit tests; shaped like real service responses. */

import type { LabelDocument, ResolvedView } from '../src/types.js';

export function sampleLabel(): LabelDocument {
  return {
    label_id: 'sample-1',
    schema_version: '1.0',
    dataset_name: 'Sample dataset',
    publisher: 'Sample publisher',
    date_produced: '2020-11-01',
    overview_modules: [
      { kind: 'key_facts', facts: { Coverage: 'statewide', Cadence: 'daily' } },
      { kind: 'badges', use_case_count: 3, alert_count: 5, fyi_count: 2 },
      { kind: 'free_text', title: 'Note', text: 'Read the alerts first.' },
    ],
    use_cases: [
      {
        id: 'u1',
        title: 'Forecast demand',
        description: 'Projecting demand.',
        predictions: [
          { id: 'p1', title: 'Extrapolation', method_description: 'Curve fitting.' },
          { id: 'p2', title: 'Regression', method_description: 'Feature model.' },
        ],
      },
      {
        id: 'u2',
        title: 'Rank regions',
        description: 'Ordering regions.',
        predictions: [{ id: 'p3', title: 'Scoring', method_description: 'Weighted sum.' }],
      },
    ],
    alerts: [
      {
        id: 'a-global',
        title: 'Global issue',
        description: 'Applies everywhere.',
        severity: 'red',
        scope: [{ kind: 'global' }],
      },
      {
        id: 'a-u1',
        title: 'Use case issue',
        description: 'Applies to u1.',
        severity: 'yellow',
        mitigation: 'Smooth it.',
        scope: [{ kind: 'use_case', use_case: 'u1' }],
      },
      {
        id: 'a-pair',
        title: 'Pair issue',
        description: 'Applies to (u1, p2).',
        severity: 'orange',
        mitigation: 'Check it.',
        scope: [{ kind: 'pair', use_case: 'u1', prediction: 'p2' }],
      },
    ],
    fyis: [
      {
        id: 'f-global',
        title: 'Heads-up',
        description: 'Just information.',
        scope: [{ kind: 'global' }],
      },
    ],
    questionnaire: [
      {
        question_id: 'q-desc',
        category: 'Description',
        question_text: 'What is inside?',
        answer: 'Numbers.',
      },
      {
        question_id: 'q-coll',
        category: 'Collection',
        question_text: 'How collected?',
        answer: 'By hand.',
        flag: {
          kind: 'alert',
          severity: 'orange',
          mitigation: 'Cross-check.',
          scope: [{ kind: 'global' }],
          summary: 'Manual collection',
        },
      },
      {
        question_id: 'q-mgmt',
        category: 'Management',
        question_text: 'Retention plan?',
        answer: '',
        flag: {
          kind: 'alert',
          severity: 'red',
          scope: [{ kind: 'global' }],
          summary: 'Unanswered flag',
        },
      },
    ],
  };
}

export function sampleView(useCaseId: string, predictionId: string): ResolvedView {
  return {
    use_case_id: useCaseId,
    prediction_id: predictionId,
    alerts: [
      {
        id: 'a-global',
        title: 'Global issue',
        description: 'Applies everywhere.',
        severity: 'red',
        scope: [{ kind: 'global' }],
      },
      {
        id: 'q:q-coll',
        title: 'Manual collection',
        description: 'By hand.',
        severity: 'orange',
        mitigation: 'Cross-check.',
        scope: [{ kind: 'global' }],
        derived_from_question: 'q-coll',
      },
      {
        id: 'a-u1',
        title: 'Use case issue',
        description: 'Applies to u1.',
        severity: 'yellow',
        mitigation: 'Smooth it.',
        scope: [{ kind: 'use_case', use_case: 'u1' }],
      },
    ],
    fyis: [
      {
        id: 'f-global',
        title: 'Heads-up',
        description: 'Just information.',
        scope: [{ kind: 'global' }],
      },
    ],
    severity_summary: { red: 1, orange: 1, yellow: 1 },
  };
}
