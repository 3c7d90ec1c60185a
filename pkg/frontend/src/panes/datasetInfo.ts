/**
 * Dataset Info pane: the questionnaire in its five fixed categories.
 * Answered questions with a flag rule get a marker that deep-links to the
 * corresponding item on the Use Cases pane.
 */

import { el } from '../dom.js';
import { FYI_COLOR, severityClass } from '../severity.js';
import { CATEGORY_ORDER, type LabelDocument, type QuestionnaireEntry } from '../types.js';

export type FlagClickHandler = (questionId: string) => void;

function questionNode(entry: QuestionnaireEntry, onFlagClick: FlagClickHandler): HTMLElement {
  const answered = entry.answer.trim().length > 0;
  const node = el(
    'div',
    { class: 'question', 'data-question-id': entry.question_id },
    el('p', { class: 'question-text' }, entry.question_text),
    answered
      ? el('p', { class: 'answer' }, entry.answer)
      : el('p', { class: 'answer not-provided' }, 'Not provided'),
  );
  if (entry.flag && answered) {
    const color = entry.flag.kind === 'fyi' ? FYI_COLOR : (entry.flag.severity ?? 'red');
    node.append(
      el(
        'a',
        {
          class: `flag-marker ${severityClass(color)}`,
          href: '#',
          'data-flag-question': entry.question_id,
          click: (event) => {
            event.preventDefault();
            onFlagClick(entry.question_id);
          },
        },
        `flagged: ${entry.flag.summary}`,
      ),
    );
  }
  return node;
}

export function renderDatasetInfo(
  label: LabelDocument,
  onFlagClick: FlagClickHandler,
): HTMLElement {
  const pane = el('div', {});
  for (const category of CATEGORY_ORDER) {
    const section = el(
      'section',
      { class: 'category', 'data-category': category },
      el('h3', {}, category),
    );
    const questions = label.questionnaire.filter((q) => q.category === category);
    if (!questions.length) {
      section.append(el('p', { class: 'not-provided' }, 'No questions recorded.'));
    }
    for (const question of questions) {
      section.append(questionNode(question, onFlagClick));
    }
    pane.append(section);
  }
  return pane;
}
