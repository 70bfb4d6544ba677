"""Heuristic derivation generators over dependency-annotated sentences.

Linguistic annotations come from a columnar parse file (10 tab-separated
columns per token, blank-line sentence separation, a `# locus = a,s`
comment giving the 0-based article/sentence indices). A deliberately
simple built-in annotator is available as a fallback when no parse file
covers a sentence; it is low-quality by design and clearly labeled so.

Two generators are provided:

* the exhaustive extractor emits every subject-verb-object triple it can
  find, so it trades precision for recall;
* the core extractor emits at most one step per supporting-fact sentence:
  <article title, root verb, first right dependent of the root>.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import MissingAnnotations, MissingLocusComment, ParseError
from .model import Derivation, DerivationStep, Instance, normalize_phrase

NOMINAL_POS = {"NOUN", "PROPN", "PRON", "NUM"}
VERBAL_POS = {"VERB", "AUX"}

# Closed list used by the fallback annotator to spot copulas/auxiliaries.
AUXILIARIES = {
    "is", "are", "was", "were", "am", "be", "been", "being",
    "has", "have", "had", "does", "do", "did",
    "will", "would", "can", "could", "may", "might", "shall", "should", "must",
}


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    pos: str
    head: int  # 1-based index of the governor; 0 for the root
    deprel: str


@dataclass(frozen=True)
class SentenceAnnotation:
    """Dependency annotation for one sentence, keyed by its locus."""

    locus: tuple[int, int]  # (article_index, sentence_index), 0-based
    tokens: tuple[Token, ...]

    def root_index(self) -> int | None:
        for i, tok in enumerate(self.tokens):
            if tok.head == 0:
                return i
        return None

    def children(self, index: int) -> list[int]:
        return [i for i, tok in enumerate(self.tokens) if tok.head == index + 1]

    def subtree_span(self, index: int, exclude_deprels: frozenset[str] = frozenset()) -> str:
        """Surface text of the token's full subtree, in sentence order,
        trailing punctuation dropped. Branches hanging off an excluded
        dependency relation are left out."""
        members = {index}
        changed = True
        while changed:
            changed = False
            for i, tok in enumerate(self.tokens):
                if (i not in members and tok.head - 1 in members
                        and tok.deprel not in exclude_deprels):
                    members.add(i)
                    changed = True
        ordered = [self.tokens[i] for i in sorted(members)]
        while ordered and ordered[-1].pos == "PUNCT":
            ordered.pop()
        return normalize_phrase(" ".join(t.surface for t in ordered))


@dataclass(frozen=True)
class ExtractedTriple:
    """A candidate step emitted by the exhaustive extractor."""

    step: DerivationStep
    confidence: float = 1.0


_LOCUS_RE = re.compile(r"#\s*locus\s*=\s*(\d+)\s*,\s*(\d+)")
_INSTANCE_RE = re.compile(r"#\s*instance\s*=\s*(\S+)")


def _read_annotation_blocks(path):
    """Yield (instance_id, locus, SentenceAnnotation) blocks from a columnar
    annotation file. instance_id is None when no `# instance = id` comment
    scopes the block."""
    instance_id: str | None = None
    locus: tuple[int, int] | None = None
    tokens: list[Token] = []
    saw_comment = False
    blocks = []

    def flush(line_no: int):
        nonlocal locus, tokens, saw_comment
        if not tokens and not saw_comment:
            return
        if locus is None:
            raise MissingLocusComment(f"{path}:{line_no}: sentence block without a locus comment")
        for k, tok in enumerate(tokens):
            if tok.head < 0 or tok.head > len(tokens):
                raise ParseError(f"{path}:{line_no}: token {k + 1} head index {tok.head} out of range")
        roots = [t for t in tokens if t.head == 0]
        if tokens and len(roots) != 1:
            raise ParseError(f"{path}:{line_no}: sentence must have exactly one root, got {len(roots)}")
        if tokens:
            blocks.append((instance_id, locus, SentenceAnnotation(locus, tuple(tokens))))
        locus, tokens, saw_comment = None, [], False

    lines = Path(path).read_text(encoding="utf-8").splitlines()
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            flush(line_no)
            continue
        if line.startswith("#"):
            m = _INSTANCE_RE.match(line)
            if m:
                instance_id = m.group(1)
                continue
            m = _LOCUS_RE.match(line)
            if m:
                locus = (int(m.group(1)), int(m.group(2)))
                saw_comment = True
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ParseError(f"{path}:{line_no}: expected 10 tab-separated columns, got {len(cols)}")
        try:
            head = int(cols[6])
        except ValueError as exc:
            raise ParseError(f"{path}:{line_no}: bad head index {cols[6]!r}") from exc
        tokens.append(Token(cols[1], cols[2], cols[3], head, cols[7]))
    flush(len(lines) + 1)
    return blocks


def parse_annotation_file(path) -> dict[tuple[int, int], SentenceAnnotation]:
    """Read a single-instance annotation file into a locus-keyed map.

    Sentences without a parse are simply absent from the map; errors carry
    the offending line number. Duplicate loci are rejected.
    """
    annotations: dict[tuple[int, int], SentenceAnnotation] = {}
    for _, locus, annotation in _read_annotation_blocks(path):
        if locus in annotations:
            raise ParseError(f"{path}: duplicate locus {locus}")
        annotations[locus] = annotation
    return annotations


def load_annotation_corpus(path) -> dict[str | None, dict[tuple[int, int], SentenceAnnotation]]:
    """Read a corpus-level annotation file whose blocks are scoped by
    `# instance = id` comments; unscoped blocks land under the None key."""
    corpus: dict[str | None, dict[tuple[int, int], SentenceAnnotation]] = {}
    for instance_id, locus, annotation in _read_annotation_blocks(path):
        bucket = corpus.setdefault(instance_id, {})
        if locus in bucket:
            raise ParseError(f"{path}: duplicate locus {locus} for instance {instance_id!r}")
        bucket[locus] = annotation
    return corpus


def naive_fallback_annotate(sentence: str, locus: tuple[int, int] = (0, 0)) -> SentenceAnnotation:
    """Heuristic annotation when no parse is supplied. Deterministic and
    intentionally crude: regex tokenization, closed-list auxiliary
    detection, and a flat rightward attachment scheme.

    The first auxiliary followed by a participle promotes the participle
    to root; otherwise the first auxiliary itself is the root. Tokens
    before the root attach to it; tokens after it chain rightward so the
    root's first right child spans the rest of the sentence.
    """
    surfaces = re.findall(r"\w+(?:[-'’]\w+)*|[^\w\s]", sentence)
    if not surfaces:
        return SentenceAnnotation(locus, ())

    def looks_participle(word: str) -> bool:
        w = word.lower()
        return w.endswith(("ed", "en", "ing")) and w not in AUXILIARIES

    root = None
    aux_at = None
    for i, word in enumerate(surfaces):
        if word.lower() in AUXILIARIES:
            aux_at = i
            if i + 1 < len(surfaces) and looks_participle(surfaces[i + 1]):
                root = i + 1
            else:
                root = i
            break
    if root is None:
        # no auxiliary; fall back to the first participle-looking token
        for i, word in enumerate(surfaces):
            if looks_participle(word):
                root = i
                break
    if root is None:
        root = 0  # degenerate sentence; flat annotation, no verb root

    tokens = []
    for i, word in enumerate(surfaces):
        if re.fullmatch(r"[^\w\s]+", word):
            pos = "PUNCT"
        elif i == root and (word.lower() in AUXILIARIES or looks_participle(word)):
            pos = "VERB"
        elif i == aux_at and aux_at != root:
            pos = "AUX"
        elif word[0].isupper():
            pos = "PROPN"
        elif word.isdigit():
            pos = "NUM"
        else:
            pos = "NOUN"
        if i == root:
            head, deprel = 0, "root"
        elif i < root:
            head, deprel = root + 1, "dep"
        else:
            head, deprel = i, "dep"  # chain to the previous token
        tokens.append(Token(word, word.lower(), pos, head, deprel))
    return SentenceAnnotation(locus, tuple(tokens))


def _annotation_for(
    instance: Instance,
    annotations: dict[tuple[int, int], SentenceAnnotation] | None,
    locus: tuple[int, int],
    fallback: bool,
) -> SentenceAnnotation:
    if annotations and locus in annotations:
        return annotations[locus]
    if not fallback:
        raise MissingAnnotations(
            f"{instance.question_id}: no annotation for article {locus[0]} sentence {locus[1]}")
    a, s = locus
    return naive_fallback_annotate(instance.articles[a][1][s], locus)


def _sentence_loci(instance: Instance, sf_only: bool) -> list[tuple[int, int]]:
    loci = []
    for a, (_, sentences) in enumerate(instance.articles):
        for s in range(len(sentences)):
            if sf_only and not instance.is_supporting_fact(a, s):
                continue
            loci.append((a, s))
    return loci


def extract_triples(annotation: SentenceAnnotation) -> list[ExtractedTriple]:
    """Built-in exhaustive rule: for each verb token, pair every nominal
    dependent on its left with every nominal/prepositional dependent on
    its right. Verbless sentences yield nothing. Coordination branches are
    trimmed from the spans so each triple names one conjunct."""
    trim = frozenset({"conj", "cc", "punct"})
    triples = []
    for v, tok in enumerate(annotation.tokens):
        if tok.pos not in VERBAL_POS:
            continue
        lefts = [c for c in annotation.children(v)
                 if c < v and annotation.tokens[c].pos in NOMINAL_POS]
        rights = [c for c in annotation.children(v)
                  if c > v and annotation.tokens[c].pos in (NOMINAL_POS | {"ADP"})]
        for left in lefts:
            for right in rights:
                head = annotation.subtree_span(left, trim)
                tail = annotation.subtree_span(right, trim)
                if head and tail:
                    triples.append(ExtractedTriple(
                        DerivationStep(head, tok.surface, tail, annotation.locus)))
    return triples


def baseline_ie(
    instance: Instance,
    annotations: dict[tuple[int, int], SentenceAnnotation] | None = None,
    sf_only: bool = True,
    fallback: bool = False,
) -> Derivation:
    """Exhaustively extract subject-predicate-object triples from the
    instance's (supporting-fact) sentences."""
    steps = []
    for locus in _sentence_loci(instance, sf_only):
        annotation = _annotation_for(instance, annotations, locus, fallback)
        steps.extend(t.step for t in extract_triples(annotation))
    return Derivation(tuple(steps))


def baseline_core(
    instance: Instance,
    annotations: dict[tuple[int, int], SentenceAnnotation] | None = None,
    fallback: bool = False,
    span: str = "subtree",
) -> Derivation:
    """Extract the core of each supporting-fact sentence: the article title,
    the sentence's root verb, and the root's first dependent to the right.

    Sentences whose root is not a verb, or whose root has no right
    dependent, are skipped. `span` selects whether the right dependent is
    rendered as its full subtree (default) or the bare token.
    """
    if span not in ("subtree", "token"):
        raise ValueError(f"unknown span mode: {span!r}")
    steps = []
    sf_only = instance.sf_flags is not None
    for locus in _sentence_loci(instance, sf_only):
        annotation = _annotation_for(instance, annotations, locus, fallback)
        root = annotation.root_index()
        if root is None or annotation.tokens[root].pos not in VERBAL_POS:
            continue
        rights = [c for c in annotation.children(root) if c > root]
        if not rights:
            continue
        first_right = min(rights)
        title = normalize_phrase(instance.articles[locus[0]][0])
        verb = annotation.tokens[root].surface
        if span == "subtree":
            tail = annotation.subtree_span(first_right)
        else:
            tail = annotation.tokens[first_right].surface
        if title and tail:
            steps.append(DerivationStep(title, verb, tail, locus))
    return Derivation(tuple(steps))
