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

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Pattern

SCAN_START = "scan/start"
SCAN_BATCH = "scan/batch"
SCAN_COMPLETE = "scan/complete"
SCAN_CRITERIA_DIFFER = "scan/criteria-differ"

EventCallback = Callable[[str, Optional[Dict[str, Any]]], None]


@dataclass
class ScanEvent:
    topic: str
    payload: Optional[Dict[str, Any]]


class EventSubscriber:

    def __init__(self, callback: Optional[EventCallback] = None):
        self._received: List[ScanEvent] = []
        self._callback = callback

    def received_events(self) -> List[ScanEvent]:
        return self._received

    @property
    def callback(self) -> Optional[EventCallback]:
        return self._callback

    def reset_received_events(self):
        self._received.clear()


class MemoryEventBus:
    """
    In-process publish/subscribe for scan progress.

    Subscriptions are regular expressions matched against the start of the topic,
    so ``"scan/"`` receives every scan event.
    """

    def __init__(self):
        self._subscribers: Dict[Pattern[str], List[EventSubscriber]] = {}
        self._events: List[ScanEvent] = []

    @property
    def published_events(self) -> List[ScanEvent]:
        return self._events

    def publish(self, topic: str, payload: Optional[Dict[str, Any]] = None) -> MemoryEventBus:
        self._events.append(ScanEvent(topic, payload))
        for pattern, subscribers in self._subscribers.items():
            if pattern.match(topic):
                for sub in subscribers:
                    sub.received_events().append(ScanEvent(topic, payload))
                    if sub.callback:
                        sub.callback(topic, payload)
        return self

    def subscribe(self, prefix: str, callback: Optional[EventCallback] = None) -> EventSubscriber:
        subscriber = EventSubscriber(callback)
        self._subscribers.setdefault(re.compile(prefix), []).append(subscriber)
        return subscriber

    def topics(self) -> List[str]:
        return [e.topic for e in self._events]
