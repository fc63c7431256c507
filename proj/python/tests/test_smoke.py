# Copyright (c) 2026, The focusseg Authors
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

import math
import struct
import wave
from pathlib import Path

import pytest
import scipy.stats

import focusseg

DATA = Path(__file__).resolve().parents[2] / "data"


def test_segment_fixture():
    out = focusseg.segment(DATA / "fixtures" / "to_your_left.jsonl")
    ops = [r["operation"] for r in out["records"]]
    assert ops == ["Initiate", "Replace", "Initiate", "Initiate"]
    assert [r["embedding_depth"] for r in out["records"]] == [1, 1, 2, 3]
    assert out["tree"].splitlines()[-1].startswith("    FS4")
    assert len(out["audit"]) == 4


def test_stats_on_corpus():
    rep = focusseg.stats(DATA / "replication_corpus.jsonl", pauses=DATA / "replication_pauses.jsonl")
    assert rep["record_count"] == 100
    assert rep["tests"]["anova"]["df_within"] == 96
    assert rep["tests"]["marking_t_test"]["df"] == 98
    text = focusseg.stats(DATA / "replication_corpus.jsonl", format="text")
    assert text.startswith("focusseg statistics report")


def test_stats_match_scipy():
    groups = [[0.1, 0.2, 0.25], [0.4, 0.5, 0.45, 0.6], [0.2, 0.3]]
    got = focusseg.anova(groups)
    want = scipy.stats.f_oneway(*groups)
    assert got["F"] == pytest.approx(want.statistic, rel=1e-10)
    assert got["p"] == pytest.approx(want.pvalue, rel=1e-8)
    x, y = [1, 2, 3, 4, 5], [0.2, 0.1, 0.5, 0.4, 0.9]
    assert focusseg.pearson(x, y)["r"] == pytest.approx(scipy.stats.pearsonr(x, y)[0], rel=1e-12)
    t = focusseg.t_test(groups[1], groups[0])
    assert t["t"] == pytest.approx(scipy.stats.ttest_ind(groups[1], groups[0]).statistic, rel=1e-10)


def test_replay_and_errors():
    assert focusseg.replay([("Initiate", 0), ("Initiate", 0), ("Return", 1), ("Replace", 1)]) == [1, 2, 1, 1]
    assert focusseg.segments_affected("Replace", 2) == 3
    with pytest.raises(focusseg.StackError):
        focusseg.replay([("Initiate", 0), ("Return", 3)])
    with pytest.raises(focusseg.IoError):
        focusseg.segment(DATA / "missing.jsonl")
    assert issubclass(focusseg.SchemaError, focusseg.Error)


def test_pauses_from_wav(tmp_path):
    rate = 16000
    tone = [int(8000 * math.sin(2 * math.pi * 220 * i / rate)) for i in range(rate // 2)]
    quiet = [0] * (rate * 3 // 10)
    path = tmp_path / "tone.wav"
    with wave.open(str(path), "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(rate)
        samples = tone + quiet + tone
        w.writeframes(struct.pack("<%dh" % len(samples), *samples))
    pauses = focusseg.detect_pauses(path)
    assert len(pauses) == 1
    assert pauses[0]["start_s"] == pytest.approx(0.5, abs=0.011)
    assert pauses[0]["reported_duration_s"] == pytest.approx(0.3)


def test_stereo_rejected():
    with pytest.raises(focusseg.UnsupportedFormat):
        focusseg.detect_pauses(Path(__file__).resolve().parents[2] / "tests" / "data" / "stereo.wav")
