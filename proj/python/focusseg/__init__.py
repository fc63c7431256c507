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

"""Focus-space discourse segmentation.

Thin layer over the C++ core. Record-shaped results come back as lists of
dicts with the same keys as the JSONL files the CLI writes.
"""

import json

from . import _core
from ._core import (
    DegenerateInput,
    Error,
    IoError,
    LengthMismatch,
    SchemaError,
    StackError,
    UnsupportedFormat,
    ZeroVariance,
    anova,
    pearson,
    replay,
    segments_affected,
    t_test,
)

__all__ = [
    "DegenerateInput", "Error", "IoError", "LengthMismatch", "SchemaError", "StackError",
    "UnsupportedFormat", "ZeroVariance", "anova", "detect_pauses", "pearson", "replay",
    "segment", "segments_affected", "stats", "t_test",
]


def _lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip() and not line.startswith("#")]


def segment(transcript, pauses=None, lexicon=None, weights=None):
    """Fragment, classify and code a transcript file.

    Returns a dict with tree (indented text), trace, records and audit.
    """
    raw = _core.segment(str(transcript), _opt(pauses), _opt(lexicon), _opt(weights))
    return {
        "tree": raw["tree"],
        "trace": _lines(raw["trace"]),
        "records": _lines(raw["records"]),
        "audit": _lines(raw["audit"]),
    }


def stats(coded, pauses=None, format="dict"):
    """Tables and tests over a CodedRecord file. format: dict, json or text."""
    if format == "dict":
        return json.loads(_core.stats(str(coded), _opt(pauses), "json"))
    return _core.stats(str(coded), _opt(pauses), format)


def detect_pauses(wav, threshold_db=10.0, min_silence_s=0.05):
    """Unfilled pauses in a 16-bit mono WAV file."""
    return _lines(_core.pauses_from_wav(str(wav), threshold_db, min_silence_s))


def _opt(path):
    return None if path is None else str(path)
