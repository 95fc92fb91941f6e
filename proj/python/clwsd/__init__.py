"""Cross-lingual word sense disambiguation over word embeddings."""

from ._clwsd import (
    Answer,
    AnswerEntry,
    AnswerSet,
    BatchResult,
    ContextTranslations,
    EmbeddingModel,
    EvalReport,
    GoldEntry,
    GoldKey,
    GoldTranslation,
    Instance,
    LemmaScore,
    Lexicon,
    Method,
    Mode,
    ParseError,
    ReportFormat,
    ScoredCandidate,
    SkippedInstance,
    Translation,
    context_translations,
    context_vec,
    cosine,
    disambiguate,
    load_answers,
    load_dataset,
    load_embeddings,
    load_gold,
    load_lexicon,
    loads_embeddings,
    loads_lexicon,
    normalize,
    rel_agg,
    rel_greedy,
    report_render,
    run_baseline,
    run_disambiguation,
    save_dataset,
    save_embeddings,
    save_gold,
    save_lexicon,
    score,
    score_candidates,
    sim,
    std_baseline,
    term_vector,
    write_answers,
)

__all__ = [
    "Answer",
    "AnswerEntry",
    "AnswerSet",
    "BatchResult",
    "ContextTranslations",
    "EmbeddingModel",
    "EvalReport",
    "GoldEntry",
    "GoldKey",
    "GoldTranslation",
    "Instance",
    "LemmaScore",
    "Lexicon",
    "Method",
    "Mode",
    "ParseError",
    "ReportFormat",
    "ScoredCandidate",
    "SkippedInstance",
    "Translation",
    "context_translations",
    "context_vec",
    "cosine",
    "disambiguate",
    "load_answers",
    "load_dataset",
    "load_embeddings",
    "load_gold",
    "load_lexicon",
    "loads_embeddings",
    "loads_lexicon",
    "normalize",
    "rel_agg",
    "rel_greedy",
    "report_render",
    "run_baseline",
    "run_disambiguation",
    "save_dataset",
    "save_embeddings",
    "save_gold",
    "save_lexicon",
    "score",
    "score_candidates",
    "sim",
    "std_baseline",
    "term_vector",
    "write_answers",
]

__version__ = "0.1.0"
