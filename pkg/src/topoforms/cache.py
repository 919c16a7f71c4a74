# -*- coding: utf-8 -*- {{{
# ===----------------------------------------------------------------------===
#
#                 topoforms
#
# ===----------------------------------------------------------------------===
#
# Copyright 2026 The topoforms developers
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may not
# use this file except in compliance with the License. You may obtain a copy
# of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.
#
# ===----------------------------------------------------------------------===
# }}}

"""
Persistent orbit cache for parameter scans.

File layout::

    # topoforms-cache p=3 q=5
    0,0;2,0<TAB>false<TAB>WEIR<TAB>false
    ...

One record per <tau, rho>-orbit: the one-sided outcome, the topograph type and
the two-sided outcome.  Records are sorted by key so files of the same panel
diff cleanly and can be merged line by line.
"""
from __future__ import annotations

import logging
import os
import re
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from topoforms.errors import CacheMismatch, InvalidParameter
from topoforms.seifert import OrbitKey, orbit_key_text, parse_orbit_key
from topoforms.topograph import TopographType

_log = logging.getLogger(__name__)

HEADER_PATTERN = re.compile(r"# topoforms-cache p=(\d+) q=(\d+)")

PathStr = Union[Path, str]


@dataclass(frozen=True)
class OrbitRecord:
    distinguishable: bool
    topograph_type: TopographType
    oriented_distinct: bool

    @property
    def criteria_differ(self) -> bool:
        return self.distinguishable != self.oriented_distinct


def _flag(text: str) -> bool:
    if text not in ("true", "false"):
        raise InvalidParameter(f"expected true/false, got {text!r}")
    return text == "true"


class OrbitCache:

    def __init__(self, p: int, q: int, records: Optional[Mapping[OrbitKey, OrbitRecord]] = None):
        self.p = p
        self.q = q
        self._records: Dict[OrbitKey, OrbitRecord] = dict(records or {})

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, key: OrbitKey) -> bool:
        return key in self._records

    def get(self, key: OrbitKey) -> Optional[OrbitRecord]:
        return self._records.get(key)

    def items(self) -> Iterator[Tuple[OrbitKey, OrbitRecord]]:
        return iter(sorted(self._records.items()))

    def merge(self, records: Mapping[OrbitKey, OrbitRecord]):
        """Add computed records; the scan's single merge point calls this after each batch."""
        self._records.update(records)

    def check_panel(self, p: int, q: int):
        if (self.p, self.q) != (p, q):
            raise CacheMismatch(f"cache holds p={self.p} q={self.q}, scan wants p={p} q={q}")

    @classmethod
    def load(cls, path: PathStr, p: int, q: int) -> OrbitCache:
        """
        Read a cache file; a missing file gives an empty cache.

        :raises CacheMismatch: if the file belongs to another (p, q) panel
        """
        path = Path(path)
        if not path.exists():
            _log.info(f"no cache at {path}, starting empty")
            return cls(p, q)

        with open(path) as fp:
            header = fp.readline().strip()
            m = HEADER_PATTERN.fullmatch(header)
            if m is None:
                raise InvalidParameter(f"{path} is not a topoforms cache file")
            cache = cls(int(m.group(1)), int(m.group(2)))
            cache.check_panel(p, q)
            for lineno, line in enumerate(fp, start=2):
                line = line.rstrip("\n")
                if not line:
                    continue
                parts = line.split("\t")
                if len(parts) != 4:
                    raise InvalidParameter(f"{path}:{lineno}: expected 4 fields, got {len(parts)}")
                key, dist, kind, oriented = parts
                try:
                    record = OrbitRecord(_flag(dist), TopographType(kind), _flag(oriented))
                except ValueError as e:
                    raise InvalidParameter(f"{path}:{lineno}: {e}") from e
                cache._records[parse_orbit_key(key)] = record
        _log.info(f"loaded {len(cache)} orbit records from {path}")
        return cache

    def dumps(self) -> str:
        lines = [f"# topoforms-cache p={self.p} q={self.q}"]
        for key, rec in self.items():
            lines.append("\t".join((orbit_key_text(key), str(rec.distinguishable).lower(),
                                    rec.topograph_type.value,
                                    str(rec.oriented_distinct).lower())))
        return "\n".join(lines) + "\n"

    def save(self, path: PathStr):
        """Write through a temporary file in the same directory and rename it into place."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
        try:
            with os.fdopen(fd, "w") as fp:
                fp.write(self.dumps())
            os.replace(tmp, path)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
        _log.info(f"saved {len(self)} orbit records to {path}")
