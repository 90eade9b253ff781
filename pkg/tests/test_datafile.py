import io

import numpy as np
import pytest

from pseudo_lindley.datafile import format_data, read_data, write_data
from pseudo_lindley.exceptions import DataFileError, DomainError

def test_reads_with_and_without_header(tmp_path):
    a = tmp_path / "a.csv"
    a.write_text("x\n0.5\n1.25\n\n3\n")
    b = tmp_path / "b.csv"
    b.write_text("0.5\n 1.25 \n3\n")
    np.testing.assert_array_equal(read_data(a).values, [0.5, 1.25, 3.0])
    np.testing.assert_array_equal(read_data(b).values, [0.5, 1.25, 3.0])
    assert read_data(a).path == str(a)

@pytest.mark.parametrize(
    "text, line",
    [
        ("x\n1.0\n-2.0\n", 3),
        ("1.0\nabc\n", 2),
        ("x\n1.0\n\ninf\n", 4),
        ("x\n1.0\n2.0\nnan\n", 4),
    ],
)
def test_bad_entries_name_their_line(tmp_path, text, line):
    path = tmp_path / "bad.csv"
    path.write_text(text)
    with pytest.raises(DataFileError) as exc:
        read_data(path)
    assert exc.value.line == line
    assert f"{path}:{line}:" in str(exc.value)
    # usage errors map to the domain error family
    assert isinstance(exc.value, DomainError)

def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_data(tmp_path / "nope.csv")

def test_write_then_read_is_exact(tmp_path):
    values = np.random.default_rng(3).exponential(size=200)
    path = tmp_path / "sample.csv"
    write_data(path, values)
    np.testing.assert_array_equal(read_data(path).values, values)

def test_write_to_stream():
    buf = io.StringIO()
    write_data(buf, np.array([0.1, 2.0]))
    assert buf.getvalue() == format_data(np.array([0.1, 2.0]))
    assert buf.getvalue().splitlines() == ["x", "0.10000000000000001", "2"]

def test_decimal_text_is_parsed_exactly(tmp_path):
    path = tmp_path / "digits.csv"
    path.write_text("x\n0.11001481267803984\n")
    assert read_data(path).values[0] == float("0.11001481267803984")

def test_invalid_utf8_names_its_line(tmp_path):
    path = tmp_path / "latin.csv"
    path.write_bytes(b"x\n1.0\n\xff\xfe2.0\n")
    with pytest.raises(DataFileError) as exc:
        read_data(path)
    assert exc.value.line == 3
    assert "UTF-8" in str(exc.value)

def test_byte_order_mark_and_crlf(tmp_path):
    path = tmp_path / "excel.csv"
    path.write_bytes(b"\xef\xbb\xbfx\r\n0.5\r\n2\r\n")
    np.testing.assert_array_equal(read_data(path).values, [0.5, 2.0])
