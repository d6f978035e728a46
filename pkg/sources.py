"""
maasscheck/sources.py

Zero-list ingestion from local files and HTTP(S) URLs.

A zero list is plain text with one spectral parameter per line, optionally
followed by its own radius:

    # r_j            radius
    9.53369526135355755434
    12.17300832467967700729   1e-20

Blank lines and '#' comments are skipped. Values are parsed exactly (as
Fractions), never through binary floating point.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Union
from urllib.parse import urlparse

import requests

from config import DEFAULT_HEADERS, DEFAULT_TIMEOUT, DEFAULT_ZERO_RADIUS
from models import FormatError, ZeroList
from rigor import ball

logger = logging.getLogger(__name__)


def _exact(token: str, line_no: int, source: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"[sources] {source}:{line_no}: not a number: {token!r}")


def parse_zero_list(text: str, source: str = "<text>",
                    default_radius: Union[str, Fraction, None] = None) -> ZeroList:
    """
    Parse zero-list text into a ZeroList of balls.

    Every entry needs a positive radius, either on its own line or through
    default_radius; midpoints must increase strictly.
    """
    declared = DEFAULT_ZERO_RADIUS if default_radius is None else str(default_radius)
    fallback = _exact(declared, 0, source)
    if fallback <= 0:
        raise FormatError(f"[sources] declared radius {declared} must be positive")

    entries = []
    previous: Optional[Fraction] = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.replace(',', ' ').split()
        if len(tokens) > 2:
            raise FormatError(f"[sources] {source}:{line_no}: expected 'r [radius]'")
        mid = _exact(tokens[0], line_no, source)
        rad = _exact(tokens[1], line_no, source) if len(tokens) == 2 else fallback
        if rad <= 0:
            raise FormatError(f"[sources] {source}:{line_no}: radius must be positive")
        if mid <= 0:
            raise FormatError(f"[sources] {source}:{line_no}: spectral parameter must be positive")
        if previous is not None and mid <= previous:
            raise FormatError(f"[sources] {source}:{line_no}: entries must be strictly ascending")
        previous = mid
        entries.append(ball(mid, rad))

    logger.info(f"[sources] {len(entries)} zeros from {source}")
    return ZeroList(entries=entries, source=source, declared_radius=declared)


def is_url(location: str) -> bool:
    return urlparse(location).scheme in ('http', 'https')


class ZeroSource:
    """
    Fetches zero-list text from a path or an HTTP(S) URL.

    The requests session is created on first remote use.
    """

    def __init__(self, timeout: int = DEFAULT_TIMEOUT):
        self.timeout = timeout
        self._session = None

    @property
    def session(self) -> requests.Session:
        """Lazy-loaded requests session with default headers."""
        if self._session is None:
            self._session = requests.Session()
            self._session.headers.update(DEFAULT_HEADERS)
        return self._session

    def fetch(self, location: str) -> str:
        """Raw text at location. Raises OSError or requests.RequestException."""
        if is_url(location):
            logger.debug(f"[sources] GET {location}")
            response = self.session.get(location, timeout=self.timeout)
            response.raise_for_status()
            return response.text
        with open(location, 'r', encoding='utf-8') as fh:
            return fh.read()

    def load(self, location: str, radius: Union[str, Fraction, None] = None) -> ZeroList:
        return parse_zero_list(self.fetch(location), source=location, default_radius=radius)


def load_zero_list(location: str, radius: Union[str, Fraction, None] = None,
                   source: Optional[ZeroSource] = None) -> ZeroList:
    """Load and parse a zero list from a path or URL."""
    return (source or ZeroSource()).load(location, radius)


def load_zero_lists(locations: List[str], radius: Union[str, Fraction, None] = None) -> ZeroList:
    """Concatenate several lists (e.g. split data files) into one ascending list."""
    source = ZeroSource()
    merged = ZeroList(source=', '.join(locations),
                      declared_radius=DEFAULT_ZERO_RADIUS if radius is None else str(radius))
    for location in locations:
        part = source.load(location, radius)
        if merged.entries and part.entries and not merged.entries[-1].mid() < part.entries[0].mid():
            raise FormatError(f"[sources] {location} does not continue the previous list")
        merged.entries.extend(part.entries)
    return merged
