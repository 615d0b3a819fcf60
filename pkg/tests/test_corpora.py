import logging

import pytest

from tweetkeys.corpora import (
    AUXILIARIES,
    CorpusError,
    CorpusStore,
    contains,
    load_corpus,
    parse_corpus,
)
from tweetkeys.model import Corpus, CorpusKind


def test_parse_collapses_duplicates_with_warning(caplog):
    with caplog.at_level(logging.WARNING):
        corpus = parse_corpus("data\nreload\n#note\nreload\n", CorpusKind.DSK)
    assert corpus.terms == {"data", "reload"}
    assert any("duplicate" in r.message for r in caplog.records)


def test_empty_corpus_is_an_error():
    with pytest.raises(CorpusError):
        parse_corpus("# only a comment\n\n", CorpusKind.REJECT)


def test_load_missing_file_is_an_error(tmp_path):
    with pytest.raises(CorpusError):
        load_corpus(tmp_path / "absent.txt", CorpusKind.DSK)


def test_load_reads_file_and_reports_kind(tmp_path):
    path = tmp_path / "words.txt"
    path.write_text("alpha\nBeta\n", encoding="utf-8")
    corpus = load_corpus(path, CorpusKind.REJECT)
    assert corpus.kind is CorpusKind.REJECT
    assert corpus.terms == {"alpha", "beta"}


def test_load_is_order_insensitive(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_text("one\ntwo\nthree\n", encoding="utf-8")
    b.write_text("three\none\ntwo\n", encoding="utf-8")
    assert load_corpus(a, CorpusKind.DSK).terms == load_corpus(b, CorpusKind.DSK).terms


def test_contains_is_exact_membership():
    corpus = parse_corpus("hello\nhi\n", CorpusKind.REJECT)
    assert contains(corpus, "hi")
    assert not contains(corpus, "Hi")  # call sites normalize before asking


def test_seed_reject_list_has_the_named_noise_words(store):
    for word in ["hello", "hi", "dear", "please", "thanks"]:
        assert contains(store.reject, word), word


def test_seed_dsk_has_domain_terms(store):
    for word in ["reload", "recharge", "sim", "roaming", "megarun"]:
        assert contains(store.dsk, word), word


def test_store_validates_disjointness():
    dsk = Corpus("d", CorpusKind.DSK, frozenset({"reload", "shared"}))
    reject = Corpus("r", CorpusKind.REJECT, frozenset({"hello", "shared"}))
    with pytest.raises(CorpusError):
        CorpusStore(dsk=dsk, reject=reject)


def test_store_validates_kinds():
    dsk = Corpus("d", CorpusKind.REJECT, frozenset({"reload"}))
    reject = Corpus("r", CorpusKind.REJECT, frozenset({"hello"}))
    with pytest.raises(CorpusError):
        CorpusStore(dsk=dsk, reject=reject)


def test_bundled_store_is_disjoint(store):
    assert not store.dsk.terms & store.reject.terms


def test_auxiliaries_are_the_closed_list():
    assert AUXILIARIES.terms == {
        "be", "have", "do", "can", "could", "will", "would",
        "shall", "should", "may", "might", "must",
    }
    assert AUXILIARIES.kind is CorpusKind.AUXILIARY
