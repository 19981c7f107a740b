#!/usr/bin/env python3
# Copyright 2026 The quotesent Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the synthetic annotation fixture with the published counts.

1592 quotes, three annotator pairs, 1292 agreements split 234 negative /
193 positive / 865 objective. The first annotator's class totals
(301 / 248 / 1043) are chosen so first-annotator per-class agreement is
77.7% / 77.8% / 82.9%.
"""

import json
import pathlib
import random

AGREED = {"negative": 234, "positive": 193, "objective": 865}
FIRST_TOTAL = {"negative": 301, "positive": 248, "objective": 1043}
OTHERS = {
    "negative": ["positive", "objective"],
    "positive": ["negative", "objective"],
    "objective": ["negative", "positive"],
}


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "agreement"
    out.mkdir(parents=True, exist_ok=True)
    labels = []
    for label in ("negative", "positive", "objective"):
        labels += [(label, label)] * AGREED[label]
        for k in range(FIRST_TOTAL[label] - AGREED[label]):
            labels.append((label, OTHERS[label][k % 2]))
    assert len(labels) == 1592
    random.Random(2008).shuffle(labels)

    with open(out / "corpus.jsonl", "w") as corpus, \
            open(out / "annotations.jsonl", "w") as ann:
        for i, (a, b) in enumerate(labels):
            qid = "t%04d" % (i + 1)
            corpus.write(json.dumps({
                "id": qid,
                "text": "Synthetic quotation %d about the target." % (i + 1),
                "source": "Speaker %d" % (i % 17 + 1),
                "target": {"name": "target"},
                "categories": [],
            }) + "\n")
            ann.write(json.dumps({
                "pair": "p%d" % (i % 3 + 1), "quote_id": qid, "a": a, "b": b,
            }) + "\n")


if __name__ == "__main__":
    main()
