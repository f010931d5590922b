"""Ingestion of tweet CSVs and ad-record text files into typed records.

Two source layouts are supported:

* Tweet archives: one CSV row per tweet, with a header row. Column names
  are configurable through a schema map so differently-exported archives
  can be read without rewriting the file.
* Ad dumps: one plain-text file per ad, made of labeled sections
  ("Ad ID", "Ad Text", "Ad Landing Page", ...). Redacted content shows
  up as runs of question marks; ads whose text is nothing but redaction
  are dropped on the floor.

Records are immutable and safe to share across threads; parsers hold no
global state.
"""

from __future__ import annotations

import csv
import re
import string
from dataclasses import dataclass, field
from datetime import date, datetime, timedelta, timezone
from enum import Enum
from typing import Iterable, Iterator, Optional, TextIO, Union

from .errors import (
    ConflictingLabels,
    EmptyInput,
    MalformedRow,
    MissingColumn,
    MissingSection,
    UnparseableMetric,
)


class AccountCategory(Enum):
    """The eight behavioral account categories used to label source data."""

    COMMERCIAL = "Commercial"
    FEARMONGER = "Fearmonger"
    HASHTAG_GAMER = "HashtagGamer"
    LEFT_TROLL = "LeftTroll"
    NEWS_FEED = "NewsFeed"
    NON_ENGLISH = "NonEnglish"
    RIGHT_TROLL = "RightTroll"
    UNKNOWN = "Unknown"

    @classmethod
    def parse(cls, text: str) -> "AccountCategory":
        """Parse a category string, tolerating spaces, underscores and case."""
        key = re.sub(r"[\s_\-]+", "", text).lower()
        try:
            return _CATEGORY_BY_KEY[key]
        except KeyError:
            raise ValueError(f"unknown account category: {text!r}") from None


_CATEGORY_BY_KEY = {c.value.lower(): c for c in AccountCategory}

#: Sentinel account names for ads whose landing page leaves the platform
#: or points at an event instead of a page.
ACCOUNT_UNKNOWN = "Unknown"
ACCOUNT_EVENT = "Event"


class Redaction(Enum):
    NONE = "None"
    PARTIAL = "Partial"


class Source(Enum):
    TWITTER = "Twitter"
    FACEBOOK = "Facebook"
    SYNTHETIC = "Synthetic"


@dataclass(frozen=True)
class TweetRecord:
    handle: str
    content: str
    publish_ts: datetime
    followers: int
    is_retweet: bool
    category: AccountCategory


@dataclass(frozen=True)
class AdRecord:
    ad_id: str
    text: str
    landing_page: str
    account: str  # page display name, or ACCOUNT_UNKNOWN / ACCOUNT_EVENT
    clicks: Optional[int]
    impressions: Optional[int]
    creation_ts: Optional[datetime]
    redaction: Redaction


class Dropped:
    """Marker returned for ads whose text was fully redacted."""

    def __repr__(self) -> str:  # pragma: no cover
        return "Dropped"


DROPPED = Dropped()


@dataclass(frozen=True)
class Document:
    doc_id: str
    text: str
    label: Optional[AccountCategory]
    source: Source
    account: Optional[str] = None
    timestamp: Optional[datetime] = None


@dataclass
class Corpus:
    documents: list[Document] = field(default_factory=list)

    def __post_init__(self) -> None:
        seen = set()
        for doc in self.documents:
            if doc.doc_id in seen:
                raise ValueError(f"duplicate doc_id: {doc.doc_id}")
            seen.add(doc.doc_id)

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)

    def labels(self) -> list[Optional[AccountCategory]]:
        return [d.label for d in self.documents]


# ---------------------------------------------------------------------------
# Tweet CSVs
# ---------------------------------------------------------------------------

#: Logical field -> default column name. Matches the common troll-tweet
#: archive export; pass a schema map to parse_tweet_csv to override.
DEFAULT_TWEET_SCHEMA = {
    "handle": "author",
    "content": "content",
    "publish_date": "publish_date",
    "category": "account_category",
    "followers": "followers",
    "is_retweet": "retweet",
}

REQUIRED_TWEET_FIELDS = ("handle", "content", "publish_date", "category")

_TS_FORMATS = (
    "%m/%d/%Y %H:%M",
    "%m/%d/%Y %H:%M:%S",
    "%Y-%m-%d %H:%M",
    "%Y-%m-%d %H:%M:%S",
)

_TRUE_STRINGS = {"1", "true", "t", "yes", "y"}
_FALSE_STRINGS = {"0", "false", "f", "no", "n", ""}


def parse_timestamp(text: str) -> datetime:
    """Parse a timestamp string; naive values are taken as UTC."""
    text = text.strip()
    try:
        ts = datetime.fromisoformat(text)
    except ValueError:
        ts = None
    if ts is None:
        for fmt in _TS_FORMATS:
            try:
                ts = datetime.strptime(text, fmt)
                break
            except ValueError:
                continue
    if ts is None:
        raise ValueError(f"unparseable timestamp: {text!r}")
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def _parse_bool(text: str) -> bool:
    key = text.strip().lower()
    if key in _TRUE_STRINGS:
        return True
    if key in _FALSE_STRINGS:
        return False
    raise ValueError(f"unparseable boolean: {text!r}")


def iter_tweet_csv(
    stream: TextIO,
    schema: Optional[dict[str, str]] = None,
    strict: bool = False,
) -> Iterator[Union[TweetRecord, tuple[int, str]]]:
    """Stream TweetRecords from a CSV file handle.

    Yields TweetRecord for well-formed rows. Malformed rows raise
    MalformedRow in strict mode; otherwise they are yielded as
    (line_no, message) tuples so callers can report them.
    """
    schema = {**DEFAULT_TWEET_SCHEMA, **(schema or {})}
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise MissingColumn("empty input: no header row") from None
    positions = {name: i for i, name in enumerate(header)}
    for logical in REQUIRED_TWEET_FIELDS:
        if schema[logical] not in positions:
            raise MissingColumn(
                f"header lacks column {schema[logical]!r} (for {logical})"
            )
    col = {f: positions.get(schema[f]) for f in schema}

    for line_no, row in enumerate(reader, start=2):
        if not row:
            continue
        try:
            yield _row_to_tweet(row, col)
        except (ValueError, IndexError) as exc:
            if strict:
                raise MalformedRow(line_no, str(exc)) from exc
            yield (line_no, str(exc))


def _row_to_tweet(row: list[str], col: dict[str, Optional[int]]) -> TweetRecord:
    def get(field_name: str) -> str:
        idx = col.get(field_name)
        if idx is None or idx >= len(row):
            return ""
        return row[idx]

    content = get("content")
    if not content.strip():
        raise ValueError("empty content")
    category = AccountCategory.parse(get("category"))
    publish_ts = parse_timestamp(get("publish_date"))
    followers_text = get("followers").strip()
    followers = int(followers_text) if followers_text else 0
    if followers < 0:
        raise ValueError(f"negative follower count: {followers}")
    return TweetRecord(
        handle=get("handle"),
        content=content,
        publish_ts=publish_ts,
        followers=followers,
        is_retweet=_parse_bool(get("is_retweet")),
        category=category,
    )


def parse_tweet_csv(
    stream: TextIO,
    schema: Optional[dict[str, str]] = None,
    strict: bool = False,
) -> tuple[list[TweetRecord], list[tuple[int, str]]]:
    """Parse a whole tweet CSV; returns (records, skipped-row issues)."""
    records: list[TweetRecord] = []
    issues: list[tuple[int, str]] = []
    for item in iter_tweet_csv(stream, schema=schema, strict=strict):
        if isinstance(item, TweetRecord):
            records.append(item)
        else:
            issues.append(item)
    return records, issues


#: Column order of the canonical tweet CSV written by write_tweet_csv.
CANONICAL_TWEET_COLUMNS = (
    "author",
    "content",
    "publish_date",
    "followers",
    "retweet",
    "account_category",
)


def write_tweet_csv(records: Iterable[TweetRecord], stream: TextIO) -> None:
    """Serialize records to the canonical CSV form (ISO timestamps, 0/1 flags)."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CANONICAL_TWEET_COLUMNS)
    for r in records:
        writer.writerow(
            [
                r.handle,
                r.content,
                r.publish_ts.isoformat(),
                str(r.followers),
                "1" if r.is_retweet else "0",
                r.category.value,
            ]
        )


# ---------------------------------------------------------------------------
# Ad record files
# ---------------------------------------------------------------------------

#: Section labels recognized at the start of a line in an ad text file.
_AD_LABELS = (
    "Ad ID",
    "Ad Text",
    "Ad Landing Page",
    "Ad Targeting",
    "Ad Impressions",
    "Ad Clicks",
    "Ad Spend",
    "Ad Creation Date",
    "Ad End Date",
)

_REDACTION_RUN = re.compile(r"\?{2,}")
_STRIPPABLE = str.maketrans("", "", string.punctuation + string.whitespace)


def _split_sections(block: str) -> dict[str, str]:
    """Group the lines of one ad file under their section labels.

    A line starting with a known label opens that section; later lines
    without a label continue the open section.
    """
    sections: dict[str, list[str]] = {}
    current: Optional[str] = None
    for line in block.splitlines():
        matched = None
        for label in _AD_LABELS:
            if line.startswith(label) and (
                len(line) == len(label) or not line[len(label)].isalnum()
            ):
                matched = label
                line = line[len(label):].strip()
                break
        if matched is not None:
            current = matched
            sections.setdefault(current, [])
            if line:
                sections[current].append(line)
        elif current is not None:
            sections[current].append(line)
    return {k: "\n".join(v).strip() for k, v in sections.items()}


def _is_fully_redacted(text: str) -> bool:
    # Strip '?' runs plus all punctuation/whitespace; redaction-only text
    # leaves nothing behind.
    return text.translate(_STRIPPABLE) == ""


def _parse_metric(raw: str, name: str) -> Optional[int]:
    raw = raw.strip()
    if not raw:
        return None
    try:
        value = int(raw.replace(",", ""))
    except ValueError:
        raise UnparseableMetric(f"non-numeric {name}: {raw!r}") from None
    if value < 0:
        raise UnparseableMetric(f"negative {name}: {raw!r}")
    return value


_AD_TS_FORMATS = (
    "%m/%d/%y %I:%M:%S %p",
    "%m/%d/%Y %I:%M:%S %p",
    "%m/%d/%y",
    "%m/%d/%Y",
)

# Trailing timezone abbreviations on ad dates are dropped; the parsed time
# is kept as-is and treated as UTC for binning purposes.
_TZ_SUFFIX = re.compile(r"\s+[A-Z]{2,4}$")


def _parse_ad_timestamp(raw: str) -> Optional[datetime]:
    raw = raw.strip()
    if not raw:
        return None
    try:
        return parse_timestamp(raw)
    except ValueError:
        pass
    cleaned = _TZ_SUFFIX.sub("", raw)
    for fmt in _AD_TS_FORMATS:
        try:
            return datetime.strptime(cleaned, fmt).replace(tzinfo=timezone.utc)
        except ValueError:
            continue
    raise UnparseableMetric(f"unparseable creation date: {raw!r}")


_PLATFORM_HOSTS = {"facebook.com"}
_TRAILING_NUMERIC = re.compile(r"[-_]\d+$")


def account_from_landing_page(landing_page: str) -> str:
    """Derive a page display name from an ad landing-page URL.

    On-platform page links give the last path segment with any trailing
    numeric suffix removed and dashes/underscores turned into spaces.
    Event links map to the Event sentinel, anything off-platform (or a
    bare platform root) to Unknown.
    """
    url = landing_page.strip()
    if not url:
        return ACCOUNT_UNKNOWN
    url = re.sub(r"^[a-zA-Z][a-zA-Z0-9+.-]*://", "", url)
    url = url.split("?", 1)[0].split("#", 1)[0]
    host, _, path = url.partition("/")
    host = host.lower().split(":")[0]
    for prefix in ("www.", "m.", "web."):
        if host.startswith(prefix):
            host = host[len(prefix):]
    if host not in _PLATFORM_HOSTS:
        return ACCOUNT_UNKNOWN
    segments = [s for s in path.split("/") if s]
    if not segments:
        return ACCOUNT_UNKNOWN
    if "events" in (s.lower() for s in segments):
        return ACCOUNT_EVENT
    name = _TRAILING_NUMERIC.sub("", segments[-1])
    name = name.replace("-", " ").replace("_", " ").strip()
    return name if name else ACCOUNT_UNKNOWN


def parse_ad_record(block: str) -> Union[AdRecord, Dropped]:
    """Parse the text of one ad file into an AdRecord.

    Returns the DROPPED marker when the ad text is entirely redaction.
    The Ad Targeting section, when present, is ignored.
    """
    sections = _split_sections(block)
    if "Ad ID" not in sections or not sections["Ad ID"]:
        raise MissingSection("no Ad ID section")
    if "Ad Text" not in sections:
        raise MissingSection("no Ad Text section")

    raw_text = sections["Ad Text"]
    if _is_fully_redacted(raw_text):
        return DROPPED
    text, n_runs = _REDACTION_RUN.subn(" ", raw_text)
    text = re.sub(r"[ \t]{2,}", " ", text).strip()
    redaction = Redaction.PARTIAL if n_runs else Redaction.NONE

    landing_page = sections.get("Ad Landing Page", "").strip()
    return AdRecord(
        ad_id=sections["Ad ID"].split()[0],
        text=text,
        landing_page=landing_page,
        account=account_from_landing_page(landing_page),
        clicks=_parse_metric(sections.get("Ad Clicks", ""), "clicks"),
        impressions=_parse_metric(sections.get("Ad Impressions", ""), "impressions"),
        creation_ts=_parse_ad_timestamp(sections.get("Ad Creation Date", "")),
        redaction=redaction,
    )


# ---------------------------------------------------------------------------
# Time binning and corpus assembly
# ---------------------------------------------------------------------------

AnyRecord = Union[TweetRecord, AdRecord]


def _record_ts(record: AnyRecord) -> Optional[datetime]:
    if isinstance(record, TweetRecord):
        return record.publish_ts
    return record.creation_ts


def weekly_counts(
    records: Iterable[AnyRecord],
    time_range: Optional[tuple[datetime, datetime]] = None,
) -> tuple[list[tuple[date, int]], int]:
    """Count records per ISO week, zero-filling gaps.

    Weeks are keyed by their Monday. Returns (series, n_untimed) where
    n_untimed counts records that carried no timestamp and were excluded.
    With a time_range, only records inside it count and the series spans
    exactly the range's weeks.
    """
    untimed = 0
    stamps: list[datetime] = []
    for record in records:
        ts = _record_ts(record)
        if ts is None:
            untimed += 1
        elif time_range is None or time_range[0] <= ts <= time_range[1]:
            stamps.append(ts)
    if time_range is not None:
        first, last = time_range[0].date(), time_range[1].date()
    elif stamps:
        first = min(stamps).date()
        last = max(stamps).date()
    else:
        raise EmptyInput("no timestamped records")

    def monday(d: date) -> date:
        iso = d.isocalendar()
        return date.fromisocalendar(iso[0], iso[1], 1)

    counts: dict[date, int] = {}
    week = monday(first)
    end = monday(last)
    while week <= end:
        counts[week] = 0
        week += timedelta(days=7)
    for ts in stamps:
        counts[monday(ts.date())] += 1
    return sorted(counts.items()), untimed


class Grouping(Enum):
    PER_MESSAGE = "PerMessage"
    PER_ACCOUNT = "PerAccount"


def _record_account(record: AnyRecord) -> str:
    return record.handle if isinstance(record, TweetRecord) else record.account


def _record_text(record: AnyRecord) -> str:
    return record.content if isinstance(record, TweetRecord) else record.text


def _record_label(record: AnyRecord) -> Optional[AccountCategory]:
    return record.category if isinstance(record, TweetRecord) else None


def to_corpus(
    records: list[AnyRecord],
    grouping: Grouping = Grouping.PER_MESSAGE,
    source: Optional[Source] = None,
) -> Corpus:
    """Assemble records into a Corpus, per message or concatenated per account."""
    if not records:
        raise EmptyInput("no records to assemble")
    if source is None:
        source = (
            Source.TWITTER if isinstance(records[0], TweetRecord) else Source.FACEBOOK
        )

    if grouping is Grouping.PER_MESSAGE:
        docs = []
        width = len(str(len(records) - 1))
        for i, record in enumerate(records):
            docs.append(
                Document(
                    doc_id=f"doc-{i:0{width}d}",
                    text=_record_text(record),
                    label=_record_label(record),
                    source=source,
                    account=_record_account(record),
                    timestamp=_record_ts(record),
                )
            )
        return Corpus(docs)

    texts: dict[str, list[str]] = {}
    labels: dict[str, Optional[AccountCategory]] = {}
    for record in records:
        account = _record_account(record)
        texts.setdefault(account, []).append(_record_text(record))
        label = _record_label(record)
        if account in labels:
            if labels[account] is not None and label is not None and labels[account] != label:
                raise ConflictingLabels(
                    f"account {account!r} carries both "
                    f"{labels[account].value} and {label.value}"
                )
            if labels[account] is None:
                labels[account] = label
        else:
            labels[account] = label
    docs = [
        Document(
            doc_id=account,
            text="\n".join(texts[account]),
            label=labels[account],
            source=source,
            account=account,
        )
        for account in sorted(texts)
    ]
    return Corpus(docs)


# ---------------------------------------------------------------------------
# Normalized corpus CSV (the artifact the CLI passes between commands)
# ---------------------------------------------------------------------------

CORPUS_COLUMNS = ("doc_id", "source", "account", "label", "timestamp", "text")


def write_corpus_csv(corpus: Corpus, stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CORPUS_COLUMNS)
    for d in corpus:
        writer.writerow(
            [
                d.doc_id,
                d.source.value,
                d.account or "",
                d.label.value if d.label else "",
                d.timestamp.isoformat() if d.timestamp else "",
                d.text,
            ]
        )


def read_corpus_csv(stream: TextIO) -> Corpus:
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None or tuple(header) != CORPUS_COLUMNS:
        raise MissingColumn(
            f"corpus CSV must start with header {','.join(CORPUS_COLUMNS)}"
        )
    docs = []
    for row in reader:
        if not row:
            continue
        doc_id, source, account, label, timestamp, text = row
        docs.append(
            Document(
                doc_id=doc_id,
                text=text,
                label=AccountCategory.parse(label) if label else None,
                source=Source(source),
                account=account or None,
                timestamp=parse_timestamp(timestamp) if timestamp else None,
            )
        )
    return Corpus(docs)
