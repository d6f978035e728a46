from fractions import Fraction

import pytest
import requests

from models import FormatError
from rigor import ball
from sources import ZeroSource, is_url, load_zero_list, load_zero_lists, parse_zero_list

SAMPLE = """\
# r_j                      radius
9.53369526135355755434
12.17300832467967700729    1e-20

13.77975135189073894950,   1e-20   # comma separated
"""


def test_parse_entries_and_radii():
    zl = parse_zero_list(SAMPLE, source='sample')
    assert len(zl) == 3
    assert zl.source == 'sample'
    assert zl.declared_radius == '1e-18'
    assert zl.entries[0].overlaps(ball('9.53369526135355755434'))
    assert zl.entries[0].rad() >= ball('1e-19')
    assert zl.entries[1].rad() < ball('1e-15')


def test_parse_default_radius_override():
    zl = parse_zero_list("1.5\n2.5\n", default_radius='1/1000')
    assert zl.entries[0].overlaps(ball('1.5009'))
    assert not zl.entries[0].overlaps(ball('1.502'))
    assert zl.declared_radius == '1/1000'


@pytest.mark.parametrize('text', [
    "9.5\nabc\n",
    "9.5 0\n",
    "9.5 -1e-10\n",
    "0\n",
    "-3\n",
    "9.5\n9.5\n",
    "12.1\n9.5\n",
    "9.5 1e-10 7\n",
])
def test_parse_rejects(text):
    with pytest.raises(FormatError):
        parse_zero_list(text)


def test_parse_rejects_bad_declared_radius():
    with pytest.raises(FormatError):
        parse_zero_list("9.5\n", default_radius='0')


def test_parse_empty():
    assert len(parse_zero_list("# nothing here\n\n")) == 0


def test_is_url():
    assert is_url('https://example.org/zeros.txt')
    assert is_url('http://example.org/zeros.txt')
    assert not is_url('zeros.txt')
    assert not is_url('/data/zeros.txt')


def test_load_from_file(tmp_path):
    path = tmp_path / 'zeros.txt'
    path.write_text(SAMPLE, encoding='utf-8')
    zl = load_zero_list(str(path))
    assert len(zl) == 3
    assert zl.source == str(path)


def test_load_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_zero_list(str(tmp_path / 'absent.txt'))


def test_load_several_lists(tmp_path):
    first, second = tmp_path / 'a.txt', tmp_path / 'b.txt'
    first.write_text("9.5\n12.1\n", encoding='utf-8')
    second.write_text("13.7\n14.3\n", encoding='utf-8')
    zl = load_zero_lists([str(first), str(second)], radius=Fraction(1, 10 ** 12))
    assert len(zl) == 4
    assert zl.declared_radius == '1/1000000000000'
    with pytest.raises(FormatError):
        load_zero_lists([str(second), str(first)])


class FakeResponse:
    def __init__(self, text, status=200):
        self.text = text
        self.status = status

    def raise_for_status(self):
        if self.status >= 400:
            raise requests.HTTPError(f"{self.status} error")


class FakeSession:
    def __init__(self, response):
        self.response = response
        self.requested = []

    def get(self, url, timeout=None):
        self.requested.append((url, timeout))
        return self.response


def test_load_from_url():
    source = ZeroSource(timeout=5)
    session = FakeSession(FakeResponse("9.5\n12.1\n"))
    source._session = session
    zl = load_zero_list('https://example.org/zeros.txt', source=source)
    assert len(zl) == 2
    assert session.requested == [('https://example.org/zeros.txt', 5)]


def test_load_from_url_http_error():
    source = ZeroSource()
    source._session = FakeSession(FakeResponse("", status=404))
    with pytest.raises(requests.RequestException):
        source.load('https://example.org/missing.txt')


def test_session_is_lazy():
    source = ZeroSource()
    assert source._session is None
    session = source.session
    assert source.session is session
    assert 'User-Agent' in session.headers
