"""Tidy annotation tables for text corpora."""

from ._core import (
    AnnotationSet,
    Error,
    ValidationError,
    __version__,
    annotate_texts,
    attach_vectors,
    export_matrix,
    from_conllu,
    get_tfidf,
    load_sidecar,
    read_annotation,
    sentence_lengths,
    tidy_pca,
    top_entities,
    top_terms,
    write_annotation,
)


def tfidf_to_scipy(m):
    """Convert a get_tfidf result to a scipy.sparse COO matrix."""
    from scipy.sparse import coo_matrix

    return coo_matrix((m["value"], (m["row"], m["col"])), shape=m["shape"])


__all__ = [
    "AnnotationSet",
    "Error",
    "ValidationError",
    "annotate_texts",
    "attach_vectors",
    "export_matrix",
    "from_conllu",
    "get_tfidf",
    "load_sidecar",
    "read_annotation",
    "sentence_lengths",
    "tfidf_to_scipy",
    "tidy_pca",
    "top_entities",
    "top_terms",
    "write_annotation",
]
