"""
Ingesting tweets and ads into one normalized corpus
===================================================

Two very different source layouts land in the same Document shape: a
tweet CSV with per-row metadata, and free-text ad blocks whose redacted
spans ('?' runs) need scrubbing. Fully redacted ads are dropped; ads
whose landing page points off-platform get the Unknown account.
"""

import io

from trolltext.corpus import (
    Dropped,
    Grouping,
    parse_ad_record,
    parse_tweet_csv,
    to_corpus,
    weekly_counts,
    write_corpus_csv,
)
from trolltext.textprep import top_terms

# --- a small tweet file, as exported by the usual archives -----------

TWEETS = """\
author,content,publish_date,followers,retweet,account_category
WOKELUKE,They took our jobs and our communities!,10/2/2017 19:58,1052,0,LeftTroll
WOKELUKE,Justice for our communities now,10/3/2017 08:10,1052,0,LeftTroll
AMELIEBALDWIN,Breaking: storm coverage continues,10/2/2017 20:11,433,1,NewsFeed
SOMEGAMER,#GameNight winners announced tonight,10/9/2017 01:30,87,0,HashtagGamer
"""

records, issues = parse_tweet_csv(io.StringIO(TWEETS))
print("parsed %d tweet rows (%d skipped)" % (len(records), len(issues)))

# --- three ad blocks: clean, partially redacted, fully redacted ------

ADS = [
    """\
Ad ID 1001
Ad Text Join us for the rally, bring friends!
Ad Landing Page https://www.facebook.com/Black-Matters-1579673598947501/
Ad Impressions 12,576
Ad Clicks 1,063
Ad Creation Date 06/23/16 03:03:51 AM PDT
""",
    """\
Ad ID 1002
Ad Text We stand with ???? against ?????? hatred?
Ad Landing Page https://bit.ly/offsite
Ad Impressions 40
Ad Clicks 4
Ad Creation Date 07/02/16 11:00:00 AM PDT
""",
    """\
Ad ID 1003
Ad Text ?? ??? ????
Ad Landing Page https://www.facebook.com/Some-Page-77/
Ad Impressions 9
Ad Clicks 0
Ad Creation Date 07/03/16 09:30:00 AM PDT
""",
]

ads = []
dropped = 0
for block in ADS:
    parsed = parse_ad_record(block)
    if isinstance(parsed, Dropped):
        dropped += 1
    else:
        ads.append(parsed)
print("kept %d ads, dropped %d fully redacted" % (len(ads), dropped))
for ad in ads:
    print("  ad %s -> account %r, text %r" % (ad.ad_id, ad.account, ad.text))

# --- merge into one corpus and report on it --------------------------

corpus = to_corpus(records, Grouping.PER_MESSAGE)
print("\ncorpus of %d documents" % len(corpus))

series, untimed = weekly_counts(records)
print("weekly tweet counts (ISO Mondays, gaps zero-filled):")
for week, count in series:
    print("  %s  %d" % (week.isoformat(), count))

print("\ntop terms across the corpus:")
for term, count in top_terms(corpus, k=5):
    print("  %-12s %d" % (term, count))

buffer = io.StringIO()
write_corpus_csv(corpus, buffer)
print("\nnormalized corpus CSV, first lines:")
print("\n".join(buffer.getvalue().splitlines()[:3]))
