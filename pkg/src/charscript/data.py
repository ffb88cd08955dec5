"""Corpus data model for script-based character understanding.

A corpus lives in a directory containing ``registry.txt`` (one character
name per line, line number = id) plus up to three JSONL files named
``train.jsonl``, ``dev.jsonl`` and ``test.jsonl``. Each line is either a
scene record::

    {"scene_id": "s01", "utterances": [{"speaker": "P0", "tokens": [...]}],
     "mentions": [{"utt": 0, "start": 1, "end": 1, "gold": "alice"}],
     "speaker_labels": {"P0": "alice"}, "summary_ref": "sum01"}

or a summary record::

    {"summary_id": "sum01", "tokens": [...], "mentions": [...]}

Two speaker conventions are supported: ``linking_coref`` files name the
speaker of every utterance directly, ``guessing`` files use anonymous
slots ("P0", "P1", ...) whose gold identities live in ``speaker_labels``.
"""

from __future__ import annotations

import json
import math
import random
import re
from dataclasses import dataclass, field
from pathlib import Path

OTHER_NAME = "#OTHER#"
GENERAL_NAME = "#GENERAL#"
RESERVED_NAMES = (OTHER_NAME, GENERAL_NAME)

SPLITS = ("train", "dev", "test")
FORMATS = ("linking_coref", "guessing")

_SLOT_RE = re.compile(r"^P(\d+)$")


class CorpusError(ValueError):
    """Base class for corpus loading and validation failures."""


class MalformedRecord(CorpusError):
    def __init__(self, source: str, line: int, reason: str):
        super().__init__(f"{source}:{line}: {reason}")
        self.source = source
        self.line = line
        self.reason = reason

    def as_dict(self) -> dict:
        return {"source": self.source, "line": self.line, "reason": self.reason}


class UnknownCharacter(CorpusError):
    def __init__(self, name: str):
        super().__init__(f"character {name!r} is not in the registry")
        self.name = name


class DanglingSummaryRef(CorpusError):
    def __init__(self, scene_id: str, summary_ref: str):
        super().__init__(f"scene {scene_id!r} references missing summary {summary_ref!r}")
        self.scene_id = scene_id
        self.summary_ref = summary_ref


class InvalidSpec(CorpusError):
    """Raised when a synthetic corpus spec asks for non-positive sizes."""


class CharacterRegistry:
    """The closed character set, with stable dense ids.

    The catch-all entries #OTHER# and #GENERAL# are ordinary members (they
    get ids and participate in classification) but are flagged as reserved
    so coreference clustering can treat their mentions as singletons.
    """

    def __init__(self, names: list[str] | tuple[str, ...]):
        seen = set()
        ordered = []
        for name in names:
            if name in seen:
                raise CorpusError(f"duplicate character name {name!r}")
            seen.add(name)
            ordered.append(name)
        for reserved in RESERVED_NAMES:
            if reserved not in seen:
                ordered.append(reserved)
        self.names: tuple[str, ...] = tuple(ordered)
        self._ids = {name: i for i, name in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, character_id: int) -> bool:
        return 0 <= character_id < len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, CharacterRegistry) and self.names == other.names

    def __repr__(self) -> str:
        return f"CharacterRegistry({len(self)} characters)"

    def id_of(self, name: str) -> int:
        try:
            return self._ids[name]
        except KeyError:
            raise UnknownCharacter(name) from None

    def name_of(self, character_id: int) -> str:
        return self.names[character_id]

    @property
    def other_id(self) -> int:
        return self._ids[OTHER_NAME]

    @property
    def general_id(self) -> int:
        return self._ids[GENERAL_NAME]

    @property
    def reserved_ids(self) -> frozenset[int]:
        return frozenset({self.other_id, self.general_id})

    def is_reserved(self, character_id: int) -> bool:
        return character_id in self.reserved_ids

    def regular_ids(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.names)) if not self.is_reserved(i))


@dataclass(frozen=True)
class Utterance:
    """One turn of dialogue. Exactly one of the speaker fields is set."""

    tokens: tuple[str, ...]
    utterance_index: int
    speaker_character: int | None = None  # registry id (linking_coref files)
    speaker_slot: int | None = None       # anonymous slot index (guessing files)

    def __post_init__(self):
        if not self.tokens:
            raise CorpusError(f"utterance {self.utterance_index} has no tokens")
        if (self.speaker_character is None) == (self.speaker_slot is None):
            raise CorpusError(
                f"utterance {self.utterance_index} must have exactly one of "
                "speaker_character / speaker_slot"
            )


@dataclass(frozen=True)
class MentionSpan:
    """Inclusive token span referring to one character."""

    utterance_index: int
    start_token: int
    end_token: int
    gold_character: int
    mention_id: str


@dataclass(frozen=True)
class Scene:
    scene_id: str
    utterances: tuple[Utterance, ...]
    mentions: tuple[MentionSpan, ...]
    speaker_labels: dict[int, int] = field(default_factory=dict)  # slot -> character id
    summary_ref: str | None = None

    def anonymous_slots(self) -> tuple[int, ...]:
        slots = sorted({u.speaker_slot for u in self.utterances if u.speaker_slot is not None})
        return tuple(slots)

    def speaker_of(self, utterance_index: int) -> int | None:
        """Resolve the utterance's speaker to a character id, if known."""
        utt = self.utterances[utterance_index]
        if utt.speaker_character is not None:
            return utt.speaker_character
        return self.speaker_labels.get(utt.speaker_slot)

    def present_characters(self) -> frozenset[int]:
        """Characters with at least one mention or labelled slot in this scene."""
        present = {m.gold_character for m in self.mentions}
        present.update(self.speaker_labels.values())
        return frozenset(present)


@dataclass(frozen=True)
class Summary:
    summary_id: str
    tokens: tuple[str, ...]
    mentions: tuple[MentionSpan, ...]

    def present_characters(self) -> frozenset[int]:
        return frozenset(m.gold_character for m in self.mentions)


@dataclass(frozen=True)
class AlignedSample:
    """A scene paired with its summary, plus the characters present in both."""

    scene: Scene
    summary: Summary | None
    shared_characters: tuple[int, ...]


@dataclass(frozen=True)
class Corpus:
    registry: CharacterRegistry
    scenes_by_split: dict[str, tuple[Scene, ...]]
    summaries_by_split: dict[str, tuple[Summary, ...]]
    format: str = "guessing"

    def scenes(self, split: str | None = None) -> tuple[Scene, ...]:
        if split is not None:
            return self.scenes_by_split.get(split, ())
        return tuple(s for name in SPLITS for s in self.scenes_by_split.get(name, ()))

    def summaries(self) -> dict[str, Summary]:
        out: dict[str, Summary] = {}
        for name in SPLITS:
            for summary in self.summaries_by_split.get(name, ()):
                out[summary.summary_id] = summary
        return out

    def summary_for(self, scene: Scene) -> Summary | None:
        if scene.summary_ref is None:
            return None
        return self.summaries().get(scene.summary_ref)


def align_characters(scene: Scene, summary: Summary, registry: CharacterRegistry) -> AlignedSample:
    """Pair a scene with its summary, keeping only characters present on both sides.

    A character counts as present in the scene when it has a mention or a
    labelled anonymous slot there, and present in the summary when it has a
    mention there. Characters appearing on only one side are dropped; an
    empty intersection is a valid result.
    """
    scene_side = scene.present_characters()
    summary_side = summary.present_characters()
    shared = sorted(scene_side & summary_side)
    for character_id in shared:
        if character_id not in registry:
            raise UnknownCharacter(str(character_id))
    return AlignedSample(scene=scene, summary=summary, shared_characters=tuple(shared))


def aligned_samples(corpus: Corpus, split: str) -> list[AlignedSample]:
    """All scenes of a split, paired with their summaries where available."""
    summaries = corpus.summaries()
    samples = []
    for scene in corpus.scenes(split):
        summary = summaries.get(scene.summary_ref) if scene.summary_ref else None
        if summary is None:
            samples.append(AlignedSample(scene=scene, summary=None, shared_characters=()))
        else:
            samples.append(align_characters(scene, summary, corpus.registry))
    return samples


# ---------------------------------------------------------------------------
# Loading and saving
# ---------------------------------------------------------------------------


def _require(record: dict, key: str, source: str, line: int):
    if key not in record:
        raise MalformedRecord(source, line, f"missing field {key!r}")
    return record[key]


def _parse_mention(raw: dict, tokens_by_utt: list[tuple[str, ...]], registry: CharacterRegistry,
                   mention_id: str, source: str, line: int) -> MentionSpan:
    utt = _require(raw, "utt", source, line)
    start = _require(raw, "start", source, line)
    end = _require(raw, "end", source, line)
    gold = _require(raw, "gold", source, line)
    if not 0 <= utt < len(tokens_by_utt):
        raise MalformedRecord(source, line, f"mention references utterance {utt} out of range")
    n_tokens = len(tokens_by_utt[utt])
    if not (0 <= start <= end < n_tokens):
        raise MalformedRecord(
            source, line,
            f"mention span [{start}, {end}] out of bounds for utterance {utt} of {n_tokens} tokens",
        )
    return MentionSpan(
        utterance_index=utt,
        start_token=start,
        end_token=end,
        gold_character=registry.id_of(gold),
        mention_id=mention_id,
    )


def _parse_scene(record: dict, registry: CharacterRegistry, format: str, split: str,
                 source: str, line: int) -> Scene:
    scene_id = _require(record, "scene_id", source, line)
    raw_utterances = _require(record, "utterances", source, line)
    if not raw_utterances:
        raise MalformedRecord(source, line, "scene has no utterances")

    utterances = []
    tokens_by_utt = []
    for index, raw in enumerate(raw_utterances):
        speaker = _require(raw, "speaker", source, line)
        tokens = tuple(_require(raw, "tokens", source, line))
        if not tokens:
            raise MalformedRecord(source, line, f"utterance {index} has no tokens")
        slot_match = _SLOT_RE.match(speaker)
        if format == "guessing":
            if slot_match is None:
                raise MalformedRecord(
                    source, line,
                    f"utterance {index}: guessing files require anonymous P<k> speakers, got {speaker!r}",
                )
            utterances.append(Utterance(tokens=tokens, utterance_index=index,
                                        speaker_slot=int(slot_match.group(1))))
        else:
            utterances.append(Utterance(tokens=tokens, utterance_index=index,
                                        speaker_character=registry.id_of(speaker)))
        tokens_by_utt.append(tokens)

    speaker_labels = {}
    for slot_name, char_name in record.get("speaker_labels", {}).items():
        slot_match = _SLOT_RE.match(slot_name)
        if slot_match is None:
            raise MalformedRecord(source, line, f"bad speaker_labels key {slot_name!r}")
        speaker_labels[int(slot_match.group(1))] = registry.id_of(char_name)

    if format == "guessing" and split in ("train", "dev"):
        referenced = {u.speaker_slot for u in utterances}
        missing = sorted(referenced - set(speaker_labels))
        if missing:
            raise MalformedRecord(
                source, line,
                f"scene {scene_id!r}: slots {missing} lack gold labels in supervised split {split!r}",
            )

    mentions = tuple(
        _parse_mention(raw, tokens_by_utt, registry, f"{scene_id}:m{j}", source, line)
        for j, raw in enumerate(record.get("mentions", []))
    )
    return Scene(
        scene_id=scene_id,
        utterances=tuple(utterances),
        mentions=mentions,
        speaker_labels=speaker_labels,
        summary_ref=record.get("summary_ref"),
    )


def _parse_summary(record: dict, registry: CharacterRegistry, source: str, line: int) -> Summary:
    summary_id = _require(record, "summary_id", source, line)
    tokens = tuple(_require(record, "tokens", source, line))
    if not tokens:
        raise MalformedRecord(source, line, "summary has no tokens")
    mentions = tuple(
        _parse_mention(raw, [tokens], registry, f"{summary_id}:m{j}", source, line)
        for j, raw in enumerate(record.get("mentions", []))
    )
    return Summary(summary_id=summary_id, tokens=tokens, mentions=mentions)


def load_registry(path: Path) -> CharacterRegistry:
    names = [line.strip() for line in path.read_text(encoding="utf-8").splitlines() if line.strip()]
    return CharacterRegistry(names)


def load_corpus(path: str | Path, format: str = "guessing") -> Corpus:
    """Load and validate a corpus directory. Raises on the first bad record."""
    if format not in FORMATS:
        raise CorpusError(f"unknown corpus format {format!r}; expected one of {FORMATS}")
    root = Path(path)
    registry_path = root / "registry.txt"
    if not registry_path.exists():
        raise CorpusError(f"no registry.txt under {root}")
    registry = load_registry(registry_path)

    scenes_by_split: dict[str, tuple[Scene, ...]] = {}
    summaries_by_split: dict[str, tuple[Summary, ...]] = {}
    for split in SPLITS:
        split_path = root / f"{split}.jsonl"
        if not split_path.exists():
            continue
        scenes: list[Scene] = []
        summaries: list[Summary] = []
        source = str(split_path)
        for line_no, raw_line in enumerate(split_path.read_text(encoding="utf-8").splitlines(), start=1):
            if not raw_line.strip():
                continue
            try:
                record = json.loads(raw_line)
            except json.JSONDecodeError as exc:
                raise MalformedRecord(source, line_no, f"invalid JSON: {exc.msg}") from None
            if "scene_id" in record:
                scenes.append(_parse_scene(record, registry, format, split, source, line_no))
            elif "summary_id" in record:
                summaries.append(_parse_summary(record, registry, source, line_no))
            else:
                raise MalformedRecord(source, line_no, "record is neither a scene nor a summary")
        scene_ids = [s.scene_id for s in scenes]
        if len(scene_ids) != len(set(scene_ids)):
            raise CorpusError(f"duplicate scene ids in {source}")
        scenes_by_split[split] = tuple(sorted(scenes, key=lambda s: s.scene_id))
        summaries_by_split[split] = tuple(sorted(summaries, key=lambda s: s.summary_id))

    corpus = Corpus(
        registry=registry,
        scenes_by_split=scenes_by_split,
        summaries_by_split=summaries_by_split,
        format=format,
    )
    known_summaries = corpus.summaries()
    for scene in corpus.scenes():
        if scene.summary_ref is not None and scene.summary_ref not in known_summaries:
            raise DanglingSummaryRef(scene.scene_id, scene.summary_ref)
    return corpus


def collect_diagnostics(path: str | Path, format: str = "guessing") -> list[MalformedRecord]:
    """Validation report: every per-record diagnostic, without raising.

    Re-parses each line independently so one bad record does not hide the
    rest. Corpus-level problems (dangling refs, duplicate ids) still
    surface through :func:`load_corpus`.
    """
    root = Path(path)
    registry = load_registry(root / "registry.txt")
    diagnostics: list[MalformedRecord] = []
    for split in SPLITS:
        split_path = root / f"{split}.jsonl"
        if not split_path.exists():
            continue
        source = str(split_path)
        for line_no, raw_line in enumerate(split_path.read_text(encoding="utf-8").splitlines(), start=1):
            if not raw_line.strip():
                continue
            try:
                record = json.loads(raw_line)
                if "scene_id" in record:
                    _parse_scene(record, registry, format, split, source, line_no)
                elif "summary_id" in record:
                    _parse_summary(record, registry, source, line_no)
                else:
                    raise MalformedRecord(source, line_no, "record is neither a scene nor a summary")
            except json.JSONDecodeError as exc:
                diagnostics.append(MalformedRecord(source, line_no, f"invalid JSON: {exc.msg}"))
            except MalformedRecord as exc:
                diagnostics.append(exc)
            except UnknownCharacter as exc:
                diagnostics.append(MalformedRecord(source, line_no, str(exc)))
    return diagnostics


def scene_record(scene: Scene, registry: CharacterRegistry) -> dict:
    utterances = []
    for utt in scene.utterances:
        if utt.speaker_slot is not None:
            speaker = f"P{utt.speaker_slot}"
        else:
            speaker = registry.name_of(utt.speaker_character)
        utterances.append({"speaker": speaker, "tokens": list(utt.tokens)})
    record = {
        "scene_id": scene.scene_id,
        "utterances": utterances,
        "mentions": [
            {"utt": m.utterance_index, "start": m.start_token, "end": m.end_token,
             "gold": registry.name_of(m.gold_character)}
            for m in scene.mentions
        ],
        "speaker_labels": {
            f"P{slot}": registry.name_of(char)
            for slot, char in sorted(scene.speaker_labels.items())
        },
    }
    if scene.summary_ref is not None:
        record["summary_ref"] = scene.summary_ref
    return record


def summary_record(summary: Summary, registry: CharacterRegistry) -> dict:
    return {
        "summary_id": summary.summary_id,
        "tokens": list(summary.tokens),
        "mentions": [
            {"utt": 0, "start": m.start_token, "end": m.end_token,
             "gold": registry.name_of(m.gold_character)}
            for m in summary.mentions
        ],
    }


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    """Write a corpus directory in the canonical on-disk layout."""
    root = Path(path)
    root.mkdir(parents=True, exist_ok=True)
    (root / "registry.txt").write_text(
        "".join(name + "\n" for name in corpus.registry.names), encoding="utf-8"
    )
    for split in SPLITS:
        scenes = corpus.scenes_by_split.get(split, ())
        summaries = corpus.summaries_by_split.get(split, ())
        if not scenes and not summaries:
            continue
        lines = [json.dumps(scene_record(s, corpus.registry), ensure_ascii=False) for s in scenes]
        lines += [json.dumps(summary_record(s, corpus.registry), ensure_ascii=False) for s in summaries]
        (root / f"{split}.jsonl").write_text("".join(line + "\n" for line in lines), encoding="utf-8")


# ---------------------------------------------------------------------------
# Synthetic corpora
# ---------------------------------------------------------------------------

_SYNTHETIC_NAMES = (
    "alice", "bob", "carol", "dave", "erin", "frank", "grace", "heidi",
    "ivan", "judy", "mallory", "niaj", "olivia", "peggy", "rupert", "sybil",
)

_FILLER_TOKENS = ("so", "well", "right", "look", "yeah", "okay", "no", "oh")


@dataclass(frozen=True)
class SyntheticSpec:
    """Shape of a generated corpus.

    ``vocab_skew`` is the Zipf exponent of each character's private token
    preference: 0 makes every character draw uniformly (speakers become
    indistinguishable from content alone), larger values sharpen the
    per-character signature.
    """

    n_characters: int
    n_scenes: int
    utterances_per_scene: int = 6
    vocab_skew: float = 1.0
    vocab_size: int = 50
    min_tokens: int = 4
    max_tokens: int = 8
    mention_rate: float = 0.6
    split_fractions: tuple[float, float, float] = (0.8, 0.1, 0.1)

    def __post_init__(self):
        if self.n_characters < 2:
            raise InvalidSpec("need at least 2 characters")
        if self.n_scenes < 1:
            raise InvalidSpec("need at least 1 scene")
        if self.utterances_per_scene < 1:
            raise InvalidSpec("need at least 1 utterance per scene")
        if self.vocab_size < 4:
            raise InvalidSpec("need at least 4 vocabulary tokens")
        if self.min_tokens < 1 or self.max_tokens < self.min_tokens:
            raise InvalidSpec("bad utterance length range")
        if self.vocab_skew < 0:
            raise InvalidSpec("vocab_skew must be non-negative")


def _character_names(n: int) -> list[str]:
    names = list(_SYNTHETIC_NAMES[:n])
    for i in range(len(names), n):
        names.append(f"char{i:02d}")
    return names


def _split_sizes(n: int, fractions: tuple[float, float, float]) -> dict[str, int]:
    sizes = {split: int(frac * n) for split, frac in zip(SPLITS, fractions)}
    sizes["train"] += n - sum(sizes.values())
    # With 3+ scenes every split should be populated so training runs have
    # something to evaluate on.
    for split in ("dev", "test"):
        if n >= 3 and sizes[split] == 0 and sizes["train"] > 1:
            sizes[split] += 1
            sizes["train"] -= 1
    return sizes


def generate_synthetic_corpus(spec: SyntheticSpec, seed: int) -> Corpus:
    """Deterministically generate a labelled corpus whose speakers are learnable.

    Each character draws its dialogue from a character-specific skewed
    distribution over a shared vocabulary, every scene gets a paired summary
    that mentions each appearing character at least once, and utterances
    carry name/pronoun mentions so the same corpus serves linking,
    coreference and guessing. The same seed always yields a byte-identical
    corpus.
    """
    rng = random.Random(seed)
    names = _character_names(spec.n_characters)
    registry = CharacterRegistry(names)
    char_ids = list(range(spec.n_characters))

    vocab = [f"w{i:03d}" for i in range(spec.vocab_size)]
    weights_by_char = []
    for _ in char_ids:
        order = list(range(spec.vocab_size))
        rng.shuffle(order)
        weights = [0.0] * spec.vocab_size
        for rank, token_index in enumerate(order):
            weights[token_index] = 1.0 / (rank + 1) ** spec.vocab_skew
        weights_by_char.append(weights)

    def draw_tokens(character: int, count: int) -> list[str]:
        return rng.choices(vocab, weights=weights_by_char[character], k=count)

    scenes: list[Scene] = []
    summaries: list[Summary] = []
    for scene_index in range(spec.n_scenes):
        scene_id = f"scene{scene_index:04d}"
        summary_id = f"sum{scene_index:04d}"

        n_present = min(spec.utterances_per_scene, rng.randint(2, spec.n_characters))
        present = rng.sample(char_ids, n_present)
        # Every present character speaks at least once; extra turns are random.
        speakers = list(present)
        while len(speakers) < spec.utterances_per_scene:
            speakers.append(rng.choice(present))
        rng.shuffle(speakers)

        slot_of: dict[int, int] = {}
        for character in speakers:
            if character not in slot_of:
                slot_of[character] = len(slot_of)

        utterances: list[Utterance] = []
        raw_mentions: list[tuple[int, int, int, int]] = []  # (utt, start, end, gold)
        for utt_index, character in enumerate(speakers):
            tokens = [rng.choice(_FILLER_TOKENS)]
            tokens += draw_tokens(character, rng.randint(spec.min_tokens, spec.max_tokens) - 1)
            if rng.random() < spec.mention_rate:
                kind = rng.random()
                position = rng.randint(0, len(tokens))
                if kind < 0.3:
                    # First-person pronoun mention of the speaker.
                    tokens.insert(position, "i")
                    raw_mentions.append((utt_index, position, position, character))
                elif kind < 0.8:
                    target = rng.choice(present)
                    tokens.insert(position, names[target])
                    raw_mentions.append((utt_index, position, position, target))
                else:
                    target = rng.choice(present)
                    tokens.insert(position, names[target])
                    tokens.insert(position, "miss")
                    raw_mentions.append((utt_index, position, position + 1, target))
            utterances.append(Utterance(tokens=tuple(tokens), utterance_index=utt_index,
                                        speaker_slot=slot_of[character]))

        raw_mentions.sort()
        mentions = tuple(
            MentionSpan(utterance_index=u, start_token=s, end_token=e,
                        gold_character=g, mention_id=f"{scene_id}:m{j}")
            for j, (u, s, e, g) in enumerate(raw_mentions)
        )

        summary_tokens: list[str] = []
        summary_raw: list[tuple[int, int, int]] = []  # (start, end, gold)
        for character in sorted(slot_of, key=slot_of.get):
            sentence = [names[character], "talks", "about"]
            summary_raw.append((len(summary_tokens), len(summary_tokens), character))
            summary_tokens += sentence + draw_tokens(character, 2) + ["."]
            if rng.random() < 0.4:
                summary_raw.append((len(summary_tokens), len(summary_tokens), character))
                summary_tokens += [names[character], "is", "seen", "again", "."]
        summary_mentions = tuple(
            MentionSpan(utterance_index=0, start_token=s, end_token=e,
                        gold_character=g, mention_id=f"{summary_id}:m{j}")
            for j, (s, e, g) in enumerate(summary_raw)
        )

        scenes.append(Scene(
            scene_id=scene_id,
            utterances=tuple(utterances),
            mentions=mentions,
            speaker_labels={slot: character for character, slot in slot_of.items()},
            summary_ref=summary_id,
        ))
        summaries.append(Summary(summary_id=summary_id, tokens=tuple(summary_tokens),
                                 mentions=summary_mentions))

    sizes = _split_sizes(spec.n_scenes, spec.split_fractions)
    scenes_by_split: dict[str, tuple[Scene, ...]] = {}
    summaries_by_split: dict[str, tuple[Summary, ...]] = {}
    cursor = 0
    for split in SPLITS:
        end = cursor + sizes[split]
        scenes_by_split[split] = tuple(scenes[cursor:end])
        summaries_by_split[split] = tuple(summaries[cursor:end])
        cursor = end
    return Corpus(
        registry=registry,
        scenes_by_split=scenes_by_split,
        summaries_by_split=summaries_by_split,
        format="guessing",
    )


def corpus_stats(corpus: Corpus) -> dict:
    """Count scenes, utterances, mentions and slots per split and per character."""
    splits = {}
    per_character = {name: 0 for name in corpus.registry.names}
    for split in SPLITS:
        scenes = corpus.scenes_by_split.get(split, ())
        summaries = corpus.summaries_by_split.get(split, ())
        n_mentions = 0
        n_utterances = 0
        n_slots = 0
        for scene in scenes:
            n_utterances += len(scene.utterances)
            n_mentions += len(scene.mentions)
            n_slots += len(scene.anonymous_slots())
            for mention in scene.mentions:
                per_character[corpus.registry.name_of(mention.gold_character)] += 1
        splits[split] = {
            "scenes": len(scenes),
            "utterances": n_utterances,
            "mentions": n_mentions,
            "anonymous_slots": n_slots,
            "summaries": len(summaries),
        }
    totals = {
        key: sum(splits[split][key] for split in SPLITS)
        for key in ("scenes", "utterances", "mentions", "anonymous_slots", "summaries")
    }
    return {
        "format": corpus.format,
        "characters": len(corpus.registry),
        "splits": splits,
        "totals": totals,
        "mentions_per_character": per_character,
    }
