"""Tests for record ingestion, redaction handling, and corpus assembly."""

import io
from datetime import date, datetime, timezone

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trolltext.corpus import (
    ACCOUNT_EVENT,
    ACCOUNT_UNKNOWN,
    CANONICAL_TWEET_COLUMNS,
    DROPPED,
    AccountCategory,
    AdRecord,
    Corpus,
    Document,
    Dropped,
    Grouping,
    Redaction,
    Source,
    TweetRecord,
    account_from_landing_page,
    parse_ad_record,
    parse_timestamp,
    parse_tweet_csv,
    read_corpus_csv,
    to_corpus,
    weekly_counts,
    write_corpus_csv,
    write_tweet_csv,
)
from trolltext.errors import (
    ConflictingLabels,
    EmptyInput,
    MalformedRow,
    MissingColumn,
    MissingSection,
    UnparseableMetric,
)

TWEET_CSV = """\
author,content,publish_date,followers,retweet,account_category
WOKELUKE,They took our jobs!,10/1/2017 19:58,1052,0,LeftTroll
AMELIEBALDWIN,Breaking: local news story,10/1/2017 20:11,433,1,NewsFeed
SOMEGAMER,#GameNight winners announced,10/2/2017 01:30,87,0,HashtagGamer
"""


def make_tweet(handle="h", content="some text", category=AccountCategory.LEFT_TROLL,
               ts="2017-10-01 19:58", followers=10, is_retweet=False):
    return TweetRecord(
        handle=handle,
        content=content,
        publish_ts=parse_timestamp(ts) if ts else None,
        followers=followers,
        is_retweet=is_retweet,
        category=category,
    )


class TestTweetCsv:
    def test_parse_happy_path(self):
        records, issues = parse_tweet_csv(io.StringIO(TWEET_CSV))
        assert issues == []
        assert len(records) == 3
        first = records[0]
        assert first.handle == "WOKELUKE"
        assert first.content == "They took our jobs!"
        assert first.category is AccountCategory.LEFT_TROLL
        assert first.followers == 1052
        assert first.is_retweet is False
        assert first.publish_ts == datetime(2017, 10, 1, 19, 58, tzinfo=timezone.utc)
        assert records[1].is_retweet is True

    def test_missing_required_column(self):
        bad = "author,content,followers\nA,hi,3\n"
        with pytest.raises(MissingColumn):
            parse_tweet_csv(io.StringIO(bad))

    def test_malformed_rows_skipped_and_reported(self):
        bad = (
            "author,content,publish_date,followers,retweet,account_category\n"
            "A,hello,10/1/2017 19:58,5,0,LeftTroll\n"
            "B,,10/1/2017 19:58,5,0,LeftTroll\n"
            "C,hi,not-a-date,5,0,LeftTroll\n"
            "D,hi,10/1/2017 19:58,5,0,NotACategory\n"
        )
        records, issues = parse_tweet_csv(io.StringIO(bad))
        assert [r.handle for r in records] == ["A"]
        assert [line for line, _ in issues] == [3, 4, 5]

    def test_strict_mode_raises_with_line_number(self):
        bad = (
            "author,content,publish_date,followers,retweet,account_category\n"
            "A,hi,not-a-date,5,0,LeftTroll\n"
        )
        with pytest.raises(MalformedRow) as exc:
            parse_tweet_csv(io.StringIO(bad), strict=True)
        assert exc.value.line_no == 2

    def test_category_parse_tolerates_spacing_and_case(self):
        assert AccountCategory.parse("Left Troll") is AccountCategory.LEFT_TROLL
        assert AccountCategory.parse("right_troll") is AccountCategory.RIGHT_TROLL
        assert AccountCategory.parse("HASHTAGGAMER") is AccountCategory.HASHTAG_GAMER
        with pytest.raises(ValueError):
            AccountCategory.parse("Troll")

    def test_roundtrip_write_then_parse(self):
        records, _ = parse_tweet_csv(io.StringIO(TWEET_CSV))
        out = io.StringIO()
        write_tweet_csv(records, out)
        out.seek(0)
        again, issues = parse_tweet_csv(out)
        assert issues == []
        assert again == records

    def test_canonical_header(self):
        out = io.StringIO()
        write_tweet_csv([make_tweet()], out)
        header = out.getvalue().splitlines()[0]
        assert header == ",".join(CANONICAL_TWEET_COLUMNS)


AD_BLOCK = """\
Ad ID 1234
Ad Text Join us for the rally, drop by and bring friends!
Ad Landing Page https://www.facebook.com/Black-Matters-1579673598947501/
Ad Targeting Location: United States
Ad Impressions 12,576
Ad Clicks 1,063
Ad Creation Date 06/23/16 03:03:51 AM PDT
"""


class TestAdParsing:
    def test_basic_block(self):
        record = parse_ad_record(AD_BLOCK)
        assert isinstance(record, AdRecord)
        assert record.ad_id == "1234"
        assert record.text.startswith("Join us")
        assert record.account == "Black Matters"
        assert record.clicks == 1063
        assert record.impressions == 12576
        assert record.redaction is Redaction.NONE
        assert record.creation_ts == datetime(
            2016, 6, 23, 3, 3, 51, tzinfo=timezone.utc
        )

    def test_fully_redacted_dropped(self):
        block = "Ad ID 9\nAd Text ?????? ??????\nAd Landing Page https://facebook.com/X/\n"
        assert parse_ad_record(block) is DROPPED
        assert isinstance(parse_ad_record(block), Dropped)

    def test_fully_redacted_with_punctuation_dropped(self):
        block = "Ad ID 9\nAd Text ??? ... ??, -- ???!\n"
        assert parse_ad_record(block) is DROPPED

    def test_partial_redaction_runs_removed(self):
        block = "Ad ID 9\nAd Text We stand with ???? against ?????? hatred?\n"
        record = parse_ad_record(block)
        assert isinstance(record, AdRecord)
        assert record.redaction is Redaction.PARTIAL
        assert "??" not in record.text
        # single genuine question mark survives
        assert record.text == "We stand with against hatred?"

    def test_unredacted_single_question_mark_kept(self):
        block = "Ad ID 9\nAd Text Why wait?\n"
        record = parse_ad_record(block)
        assert record.redaction is Redaction.NONE
        assert record.text == "Why wait?"

    def test_missing_sections(self):
        with pytest.raises(MissingSection):
            parse_ad_record("Ad Text hello\n")
        with pytest.raises(MissingSection):
            parse_ad_record("Ad ID 5\nAd Landing Page x\n")

    def test_multiline_text_and_ignored_targeting(self):
        block = (
            "Ad ID 77\n"
            "Ad Text first line\n"
            "second line\n"
            "Ad Targeting Interests: A\nAge: 18-65+\n"
            "Ad Clicks 4\n"
        )
        record = parse_ad_record(block)
        assert record.text == "first line\nsecond line"
        assert record.clicks == 4

    def test_bad_metric(self):
        with pytest.raises(UnparseableMetric):
            parse_ad_record("Ad ID 1\nAd Text hi there\nAd Clicks lots\n")
        with pytest.raises(UnparseableMetric):
            parse_ad_record("Ad ID 1\nAd Text hi there\nAd Impressions -4\n")

    def test_absent_metrics_are_none(self):
        record = parse_ad_record("Ad ID 1\nAd Text hi there\n")
        assert record.clicks is None
        assert record.impressions is None
        assert record.creation_ts is None
        assert record.account == ACCOUNT_UNKNOWN


class TestLandingPage:
    def test_page_name_from_last_segment(self):
        url = "https://www.facebook.com/Black-Matters-1579673598947501/"
        assert account_from_landing_page(url) == "Black Matters"

    def test_underscores_and_no_suffix(self):
        assert (
            account_from_landing_page("https://facebook.com/Being_Patriotic")
            == "Being Patriotic"
        )

    def test_off_platform_is_unknown(self):
        assert account_from_landing_page("https://example.org/page") == ACCOUNT_UNKNOWN
        assert account_from_landing_page("http://bit.ly/xyz") == ACCOUNT_UNKNOWN

    def test_event_link(self):
        url = "https://www.facebook.com/events/301945812752287/"
        assert account_from_landing_page(url) == ACCOUNT_EVENT

    def test_bare_host_or_empty(self):
        assert account_from_landing_page("https://facebook.com/") == ACCOUNT_UNKNOWN
        assert account_from_landing_page("") == ACCOUNT_UNKNOWN


def ad_at(day, ad_id="1"):
    return AdRecord(
        ad_id=ad_id,
        text="text",
        landing_page="",
        account=ACCOUNT_UNKNOWN,
        clicks=None,
        impressions=None,
        creation_ts=datetime(2016, *day, tzinfo=timezone.utc),
        redaction=Redaction.NONE,
    )


class TestWeeklyCounts:
    def test_single_record_single_week(self):
        series, untimed = weekly_counts([ad_at((6, 23))])
        assert untimed == 0
        assert series == [(date(2016, 6, 20), 1)]

    def test_gap_weeks_zero_filled(self):
        series, _ = weekly_counts([ad_at((6, 1)), ad_at((6, 22))])
        assert [c for _, c in series] == [1, 0, 0, 1]
        assert series[0][0] == date(2016, 5, 30)
        assert all(b - a == (series[1][0] - series[0][0]) for (a, _), (b, _) in zip(series, series[1:]))

    def test_untimed_counted_separately(self):
        records = [ad_at((6, 1)), ad_at((6, 2))]
        records.append(
            AdRecord("x", "t", "", ACCOUNT_UNKNOWN, None, None, None, Redaction.NONE)
        )
        series, untimed = weekly_counts(records)
        assert untimed == 1
        assert sum(c for _, c in series) == 2

    def test_range_filters_and_spans(self):
        rng = (
            datetime(2016, 6, 6, tzinfo=timezone.utc),
            datetime(2016, 6, 19, tzinfo=timezone.utc),
        )
        series, _ = weekly_counts([ad_at((6, 1)), ad_at((6, 8))], time_range=rng)
        assert series == [(date(2016, 6, 6), 1), (date(2016, 6, 13), 0)]

    def test_no_timestamps_raises(self):
        rec = AdRecord("x", "t", "", ACCOUNT_UNKNOWN, None, None, None, Redaction.NONE)
        with pytest.raises(EmptyInput):
            weekly_counts([rec])

    @given(
        st.lists(
            st.dates(min_value=date(2015, 3, 1), max_value=date(2017, 11, 30)),
            min_size=1,
            max_size=40,
        )
    )
    def test_totals_preserved_and_contiguous(self, days):
        records = [
            AdRecord(
                str(i), "t", "", ACCOUNT_UNKNOWN, None, None,
                datetime(d.year, d.month, d.day, tzinfo=timezone.utc),
                Redaction.NONE,
            )
            for i, d in enumerate(days)
        ]
        series, untimed = weekly_counts(records)
        assert untimed == 0
        assert sum(c for _, c in series) == len(days)
        mondays = [w for w, _ in series]
        assert all(w.weekday() == 0 for w in mondays)
        assert all((b - a).days == 7 for a, b in zip(mondays, mondays[1:]))


class TestToCorpus:
    def test_per_message_preserves_count(self):
        records = [make_tweet(handle="a"), make_tweet(handle="b"), make_tweet(handle="a")]
        corpus = to_corpus(records, Grouping.PER_MESSAGE)
        assert len(corpus) == 3
        assert len({d.doc_id for d in corpus.documents}) == 3
        assert all(d.source is Source.TWITTER for d in corpus.documents)

    def test_per_account_one_doc_per_handle(self):
        records = [
            make_tweet(handle="a", content="one"),
            make_tweet(handle="b", content="two"),
            make_tweet(handle="a", content="three"),
        ]
        corpus = to_corpus(records, Grouping.PER_ACCOUNT)
        assert len(corpus) == 2
        doc_a = next(d for d in corpus.documents if d.account == "a")
        assert "one" in doc_a.text and "three" in doc_a.text
        assert doc_a.label is AccountCategory.LEFT_TROLL

    def test_per_account_conflicting_labels(self):
        records = [
            make_tweet(handle="a", category=AccountCategory.LEFT_TROLL),
            make_tweet(handle="a", category=AccountCategory.RIGHT_TROLL),
        ]
        with pytest.raises(ConflictingLabels):
            to_corpus(records, Grouping.PER_ACCOUNT)

    def test_per_account_ads_unlabeled(self):
        ads = [ad_at((6, 1), ad_id="1"), ad_at((6, 2), ad_id="2")]
        corpus = to_corpus(ads, Grouping.PER_ACCOUNT)
        assert len(corpus) == 1
        assert corpus.documents[0].label is None
        assert corpus.documents[0].source is Source.FACEBOOK

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            to_corpus([], Grouping.PER_MESSAGE)


class TestCorpusCsv:
    def test_roundtrip(self):
        corpus = to_corpus(
            [make_tweet(handle="a"), make_tweet(handle="b", category=AccountCategory.NEWS_FEED)],
            Grouping.PER_MESSAGE,
        )
        out = io.StringIO()
        write_corpus_csv(corpus, out)
        out.seek(0)
        again = read_corpus_csv(out)
        assert again == corpus

    def test_header_enforced(self):
        with pytest.raises(MissingColumn):
            read_corpus_csv(io.StringIO("doc_id,text\n1,hello\n"))

    def test_duplicate_doc_ids_rejected(self):
        doc = Document(doc_id="d", text="t", label=None, source=Source.TWITTER)
        with pytest.raises(ValueError):
            Corpus([doc, doc])
