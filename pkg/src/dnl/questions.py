"""Bundled questionnaire bank: twenty questions, four per category.

Labels are free to carry ad-hoc questions as well; this bank is the
starting point an authoring tool would offer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import QuestionnaireAnswer


@dataclass(frozen=True)
class BankQuestion:
    question_id: str
    category: str
    question_text: str


QUESTION_BANK: tuple[BankQuestion, ...] = (
    BankQuestion("desc-purpose", "Description",
                 "What need or purpose motivated the creation of this dataset?"),
    BankQuestion("desc-summary", "Description",
                 "In one paragraph, what does the dataset contain?"),
    BankQuestion("desc-funding", "Description",
                 "Who funded or sponsored the dataset's creation?"),
    BankQuestion("desc-changes", "Description",
                 "How has the dataset changed since its first release?"),
    BankQuestion("comp-unit", "Composition",
                 "What does a single record represent?"),
    BankQuestion("comp-size", "Composition",
                 "How many records does the dataset contain, and is it a sample of a "
                 "larger population?"),
    BankQuestion("comp-missing", "Composition",
                 "Which fields are commonly missing or incomplete, and why?"),
    BankQuestion("comp-sensitive", "Composition",
                 "Does the dataset contain information that could identify or harm "
                 "individuals?"),
    BankQuestion("prov-source", "Provenance",
                 "Where does the underlying data originate?"),
    BankQuestion("prov-upstream", "Provenance",
                 "Which upstream sources or systems feed the dataset?"),
    BankQuestion("prov-transforms", "Provenance",
                 "What cleaning, filtering, or aggregation was applied before publication?"),
    BankQuestion("prov-versions", "Provenance",
                 "How are revisions tracked, and where are earlier versions available?"),
    BankQuestion("coll-method", "Collection",
                 "How was the data collected or measured?"),
    BankQuestion("coll-who", "Collection",
                 "Who performed the collection, and were they aware of its intended use?"),
    BankQuestion("coll-timeframe", "Collection",
                 "Over what time period was the data collected?"),
    BankQuestion("coll-consent", "Collection",
                 "Were the people described in the data informed, and did they consent?"),
    BankQuestion("mgmt-owner", "Management",
                 "Who maintains the dataset, and how can they be reached?"),
    BankQuestion("mgmt-cadence", "Management",
                 "How often is the dataset updated, and on what schedule?"),
    BankQuestion("mgmt-retention", "Management",
                 "What is the retention or deprecation plan for the dataset?"),
    BankQuestion("mgmt-access", "Management",
                 "How is access controlled, and under what license is reuse permitted?"),
)


def blank_questionnaire() -> list[QuestionnaireAnswer]:
    """Unanswered questionnaire entries for the whole bank, in bank order."""
    return [
        QuestionnaireAnswer(
            question_id=q.question_id,
            category=q.category,
            question_text=q.question_text,
            answer="",
        )
        for q in QUESTION_BANK
    ]
