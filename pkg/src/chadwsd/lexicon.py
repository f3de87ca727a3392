"""Sense inventory, stem table and corpus loading.

Every downstream module works on the preprocessed objects defined here:
glosses are reduced to sets of stems once, at load time.

File layouts (all UTF-8, ``#`` starts a comment line):

* stem table: ``word<TAB>stem`` per line.
* lexicon: blank-line separated records. The first line of a record is
  ``lemma<TAB>pos`` with pos in ``n|v|a|r``. Each following line is one
  sense, in rank order. A sense line is either the bare gloss text, or the
  three tab-separated fields ``rank<TAB>synonyms<TAB>gloss`` where ``rank``
  and ``synonyms`` (comma separated) may be left empty. Whitespace-only
  lines separate records, so an empty gloss is written as ``2<TAB><TAB>``.
* corpus: ``surface<TAB>lemma<TAB>pos[<TAB>goldSense]`` per token, a blank
  line ends a sentence. An empty lemma field means "stem the surface form".
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Optional

from .errors import FormatError

log = logging.getLogger(__name__)

StemSet = frozenset


class PosTag(enum.Enum):
    NOUN = "noun"
    VERB = "verb"
    ADJECTIVE = "adjective"
    ADVERB = "adverb"
    OTHER = "other"

    @property
    def code(self) -> str:
        """One-letter code used in lexicon, corpus and bilingual files."""
        return _CODES[self]

    @property
    def tag(self) -> str:
        """Code used inside rendered sense tags (``lemma#tag#rank``)."""
        return _TAGS[self]

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "PosTag":
        """Strict parse of a full name, file code or tag code."""
        key = text.strip().lower()
        try:
            return _PARSE[key]
        except KeyError:
            raise ValueError(f"unknown part of speech {text!r}") from None

    @classmethod
    def from_corpus_tag(cls, text: str) -> "PosTag":
        """Lenient mapping used for corpus columns.

        Accepts everything :meth:`parse` does plus Penn/Brown style tags
        (``NN*``, ``VB*``, ``JJ*``, ``RB*``). Anything else is ``OTHER``.
        """
        key = text.strip()
        if key.lower() in _PARSE:
            return _PARSE[key.lower()]
        upper = key.upper()
        for prefix, pos in _TAGSET_PREFIXES:
            if upper.startswith(prefix):
                return pos
        return cls.OTHER


CONTENT_POS = frozenset(
    {PosTag.NOUN, PosTag.VERB, PosTag.ADJECTIVE, PosTag.ADVERB})

_CODES = {PosTag.NOUN: "n", PosTag.VERB: "v", PosTag.ADJECTIVE: "a",
          PosTag.ADVERB: "r", PosTag.OTHER: "o"}
_TAGS = {PosTag.NOUN: "n", PosTag.VERB: "v", PosTag.ADJECTIVE: "a",
         PosTag.ADVERB: "adv", PosTag.OTHER: "o"}
_PARSE = {p.value: p for p in PosTag}
_PARSE.update({c: p for p, c in _CODES.items()})
_PARSE.update({t: p for p, t in _TAGS.items()})
_PARSE["s"] = PosTag.ADJECTIVE  # WordNet adjective satellite
_TAGSET_PREFIXES = (("NN", PosTag.NOUN), ("VB", PosTag.VERB),
                    ("JJ", PosTag.ADJECTIVE), ("RB", PosTag.ADVERB))


def parse_pos_filter(text: str) -> frozenset:
    """``"n,v,a,adv"`` -> set of PosTag. Raises ValueError on bad entries."""
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise ValueError("empty POS filter")
    return frozenset(PosTag.parse(t) for t in items)


def format_pos_filter(pos_filter: Iterable[PosTag]) -> str:
    order = list(PosTag)
    return ",".join(p.tag for p in sorted(pos_filter, key=order.index))


@dataclass(frozen=True)
class SenseEntry:
    rank: int
    gloss_stems: frozenset
    gloss_text: str = ""
    synonyms: tuple = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"sense rank must be >= 1, got {self.rank}")
        if not isinstance(self.gloss_stems, frozenset):
            object.__setattr__(self, "gloss_stems", frozenset(self.gloss_stems))


@dataclass(frozen=True)
class Lexeme:
    lemma: str
    pos: PosTag
    senses: tuple

    def __post_init__(self):
        senses = tuple(self.senses)
        if not senses:
            raise ValueError(f"lexeme {self.lemma}/{self.pos} has no senses")
        for i, s in enumerate(senses, 1):
            if s.rank != i:
                raise ValueError(
                    f"lexeme {self.lemma}/{self.pos}: sense ranks must be 1..N")
        object.__setattr__(self, "senses", senses)

    @classmethod
    def from_glosses(cls, lemma, pos, glosses) -> "Lexeme":
        """Build from an iterable of stem collections, ranked in order."""
        return cls(lemma, pos, tuple(
            SenseEntry(i, frozenset(g), " ".join(sorted(g)))
            for i, g in enumerate(glosses, 1)))

    def __len__(self):
        return len(self.senses)


class StemTable:
    """Word -> stem map with identity fallback."""

    def __init__(self, entries: Optional[Mapping[str, str]] = None):
        self.entries = {k.lower(): v.lower() for k, v in (entries or {}).items()}

    def lookup(self, word: str) -> str:
        return self.entries.get(word, word)

    def __contains__(self, word):
        return word in self.entries

    def __len__(self):
        return len(self.entries)

    def unclosed(self) -> list:
        """Stems that the table itself maps to something else."""
        return sorted(s for s in set(self.entries.values())
                      if self.entries.get(s, s) != s)


class Lexicon:
    """Immutable (lemma, pos) -> Lexeme mapping."""

    def __init__(self, lexemes: Iterable[Lexeme] = ()):
        self._entries = {}
        for lx in lexemes:
            key = (lx.lemma, lx.pos)
            if key in self._entries:
                raise ValueError(f"duplicate lexeme {lx.lemma}/{lx.pos}")
            self._entries[key] = lx

    def get(self, lemma: str, pos: PosTag) -> Optional[Lexeme]:
        return self._entries.get((lemma, pos))

    def __contains__(self, key):
        return key in self._entries

    def __iter__(self) -> Iterator[Lexeme]:
        return iter(self._entries.values())

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self._entries == other._entries


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    lemma: str
    pos: PosTag
    gold_sense: Optional[int] = None
    sentence: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.gold_sense is not None and self.gold_sense < 1:
            raise ValueError(f"gold sense must be >= 1, got {self.gold_sense}")


def _content_lines(path) -> Iterator[tuple]:
    """Yield (lineno, line) without the trailing newline, skipping comments."""
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, 1):
            line = raw.rstrip("\r\n")
            if line.lstrip().startswith("#"):
                continue
            yield lineno, line


def load_stem_table(path) -> StemTable:
    entries = {}
    for lineno, line in _content_lines(path):
        if not line.strip():
            continue
        cols = line.split("\t")
        if len(cols) != 2 or not cols[0].strip() or not cols[1].strip():
            raise FormatError(
                f"expected 'word<TAB>stem', got {len(cols)} column(s)",
                path, lineno)
        entries[cols[0].strip().lower()] = cols[1].strip().lower()
    table = StemTable(entries)
    bad = table.unclosed()
    if bad:
        log.warning("stem table %s is not closed under stemming "
                    "(%d stems remap, e.g. %r)", path, len(bad), bad[0])
    return table


def _strip_edges(word: str) -> str:
    start, end = 0, len(word)
    while start < end and not word[start].isalnum():
        start += 1
    while end > start and not word[end - 1].isalnum():
        end -= 1
    return word[start:end]


def normalize_word(word: str) -> str:
    """Lowercase and strip edge punctuation; no stemming."""
    return _strip_edges(word.lower())


def stem(word: str, table: Optional[StemTable] = None) -> str:
    w = normalize_word(word)
    if not w or table is None:
        return w
    return table.lookup(w)


def preprocess_gloss(raw: str, table: Optional[StemTable] = None,
                     drop_stopwords: bool = False,
                     stoplist: Iterable[str] = ()) -> frozenset:
    stems = (stem(tok, table) for tok in raw.split())
    stems = {s for s in stems if s}
    if drop_stopwords:
        stems.difference_update(stoplist)
    return frozenset(stems)


def load_stoplist(path) -> frozenset:
    """One word per line; returned lowercased."""
    words = set()
    for _, line in _content_lines(path):
        w = line.strip().lower()
        if w:
            words.add(w)
    return frozenset(words)


def _parse_sense_line(line, expected_rank, path, lineno):
    if "\t" not in line:
        return expected_rank, (), line.strip()
    cols = line.split("\t")
    if len(cols) != 3:
        raise FormatError(
            "sense line must be a bare gloss or 'rank<TAB>synonyms<TAB>gloss'",
            path, lineno)
    rank_text, syn_text, gloss = cols
    rank = expected_rank
    if rank_text.strip():
        try:
            rank = int(rank_text)
        except ValueError:
            raise FormatError(f"bad sense rank {rank_text!r}", path, lineno) from None
    synonyms = tuple(s.strip() for s in syn_text.split(",") if s.strip())
    return rank, synonyms, gloss.strip()


def load_lexicon(path, table: Optional[StemTable] = None,
                 drop_stopwords: bool = False,
                 stoplist: Iterable[str] = ()) -> Lexicon:
    stoplist = frozenset(stoplist)
    lexemes = []
    seen = {}
    record = None  # [lemma, pos, header_lineno, [SenseEntry]]

    def close():
        if record is None:
            return
        lemma, pos, header_lineno, senses = record
        if not senses:
            raise FormatError(f"record {lemma}/{pos.code} has no senses",
                              path, header_lineno)
        lexemes.append(Lexeme(lemma, pos, tuple(senses)))

    for lineno, line in _content_lines(path):
        if not line.strip():
            close()
            record = None
            continue
        if record is None:
            cols = line.split("\t")
            if len(cols) != 2 or not cols[0].strip():
                raise FormatError("record header must be 'lemma<TAB>pos'",
                                  path, lineno)
            lemma = normalize_word(cols[0]) or cols[0].strip().lower()
            try:
                pos = PosTag.parse(cols[1])
            except ValueError:
                pos = None
            if pos is None or pos is PosTag.OTHER:
                raise FormatError(f"pos must be one of n|v|a|r, got {cols[1]!r}",
                                  path, lineno)
            if (lemma, pos) in seen:
                raise FormatError(
                    f"duplicate record {lemma}/{pos.code} "
                    f"(first at line {seen[(lemma, pos)]})", path, lineno)
            seen[(lemma, pos)] = lineno
            record = [lemma, pos, lineno, []]
            continue
        senses = record[3]
        expected = len(senses) + 1
        rank, synonyms, gloss = _parse_sense_line(line, expected, path, lineno)
        if rank > expected:
            raise FormatError(f"rank gap: expected rank {expected}, got {rank}",
                              path, lineno)
        if rank < expected:
            raise FormatError(f"duplicate or out-of-order rank {rank}",
                              path, lineno)
        stems = preprocess_gloss(gloss, table, drop_stopwords, stoplist)
        senses.append(SenseEntry(rank, stems, gloss, synonyms))
    close()
    return Lexicon(lexemes)


def save_lexicon(lexicon: Lexicon, path) -> None:
    """Canonical writer; :func:`load_lexicon` reads the result back."""
    records = []
    for lx in sorted(lexicon, key=lambda x: (x.lemma, x.pos.code)):
        lines = [f"{lx.lemma}\t{lx.pos.code}"]
        for s in lx.senses:
            text = s.gloss_text
            if "\t" in text or "\n" in text or "\r" in text:
                text = " ".join(text.split())
            lines.append(f"{s.rank}\t{','.join(s.synonyms)}\t{text}")
        records.append("\n".join(lines))
    Path(path).write_text("\n\n".join(records) + "\n", encoding="utf-8")


def senses_of(lexicon: Lexicon, lemma: str, pos: PosTag) -> Optional[tuple]:
    if pos is PosTag.OTHER:
        return None
    lx = lexicon.get(lemma, pos)
    return None if lx is None else lx.senses


def load_corpus_sentences(path, table: Optional[StemTable] = None) -> list:
    """Corpus as a list of sentences, each a list of TaggedToken."""
    sentences = []
    current = []
    for lineno, line in _content_lines(path):
        if not line.strip():
            if current:
                sentences.append(current)
                current = []
            continue
        cols = line.split("\t")
        if len(cols) not in (3, 4):
            raise FormatError(
                "expected 'surface<TAB>lemma<TAB>pos[<TAB>gold]', "
                f"got {len(cols)} column(s)", path, lineno)
        surface, lemma, pos_text = (c.strip() for c in cols[:3])
        if not surface or not pos_text:
            raise FormatError("empty surface or pos column", path, lineno)
        if pos_text.isdigit():
            raise FormatError(f"pos column holds a number ({pos_text!r}); "
                              "is the lemma column missing?", path, lineno)
        lemma = lemma.lower() if lemma else stem(surface, table)
        gold = None
        if len(cols) == 4 and cols[3].strip():
            try:
                gold = int(cols[3])
            except ValueError:
                gold = 0
            if gold < 1:
                raise FormatError(f"gold sense must be a positive integer, "
                                  f"got {cols[3].strip()!r}", path, lineno)
        current.append(TaggedToken(surface, lemma,
                                   PosTag.from_corpus_tag(pos_text), gold,
                                   sentence=len(sentences)))
    if current:
        sentences.append(current)
    return sentences


def load_corpus(path, table: Optional[StemTable] = None) -> list:
    return [t for sent in load_corpus_sentences(path, table) for t in sent]
