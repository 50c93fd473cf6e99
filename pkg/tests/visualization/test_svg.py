import pytest

from utils.exceptions import ArgumentError
from visualization.svg import SvgDocument, fmt


class TestSvgDocument:
    """Element bookkeeping and serialisation of SVG documents."""

    def test_counts_by_class(self):
        doc = SvgDocument(100.0, 50.0)
        doc.add_line("cut", (10, 10), (10, 40))
        doc.add_line("valley", (10, 10), (20, 15))
        doc.add_circle("guide", (50, 25), 20)
        assert doc.count("cut") == 1
        assert doc.count(kind="circle") == 1
        assert doc.counts() == {"cut": 1, "valley": 1, "guide": 1}

    def test_header_and_units(self):
        text = SvgDocument(150.0, 100.0).to_string()
        assert text.startswith('<?xml version="1.0" encoding="UTF-8"?>')
        assert 'width="150.0000mm"' in text
        assert 'viewBox="0 0 150.0000 100.0000"' in text
        assert "stroke-width: 0.2" in text
        assert text.endswith("</svg>\n")

    def test_path_serialisation(self):
        doc = SvgDocument(10.0, 10.0)
        doc.add_path("curve", [(1, 2), (3, 4)])
        assert '<path class="curve" d="M 1.0000,2.0000 L 3.0000,4.0000" />' in doc.to_string()

    @pytest.mark.parametrize(
        "start, end",
        [((-1, 0), (5, 5)), ((0, 0), (11, 5)), ((0, 0), (5, 10.5))],
    )
    def test_elements_must_stay_in_viewport(self, start, end):
        doc = SvgDocument(10.0, 10.0)
        with pytest.raises(ArgumentError):
            doc.add_line("cut", start, end)

    def test_unknown_class_tag(self):
        with pytest.raises(ArgumentError):
            SvgDocument(10.0, 10.0).add_line("fold", (0, 0), (1, 1))

    def test_non_positive_size(self):
        with pytest.raises(ArgumentError):
            SvgDocument(0.0, 10.0)

    def test_write(self, tmp_out):
        doc = SvgDocument(10.0, 10.0)
        doc.add_line("cut", (1, 1), (2, 2))
        path = doc.write(tmp_out / "nested" / "a.svg")
        assert path.read_bytes() == doc.to_bytes()


@pytest.mark.parametrize(
    "value, expected", [(-0.0, "0.0000"), (-1e-9, "0.0000"), (1.23456, "1.2346")]
)
def test_fixed_formatting(value, expected):
    assert fmt(value) == expected
