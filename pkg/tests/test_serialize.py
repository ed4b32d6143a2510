import json

import pytest

from primover.classify import classify
from primover.cyclotomic import gen_mersenne
from primover.serialize import (
    BFileFormatError,
    family_to_dict,
    parse_bfile,
    report_to_csv,
    report_to_dict,
    report_to_json,
    report_to_text,
)


class TestReportSerialization:
    def test_dict_schema(self):
        d = report_to_dict(classify(2, 2047))
        assert d["n"] == "2047" and d["base"] == "2"
        assert d["verdicts"] == {"fermat": True, "strong": True, "super": True,
                                 "over": True, "primover": True}
        assert d["order"] == "11"
        assert d["coset_count"] == "186"
        assert d["factors"] == [["23", "1"], ["89", "1"]]
        assert d["wieferich"] == []

    def test_big_ints_are_strings(self):
        d = report_to_dict(classify(3, 2**64 + 1))
        parsed = json.loads(json.dumps(d))
        assert int(parsed["n"]) == 2**64 + 1
        for p, e in parsed["factors"]:
            assert isinstance(p, str) and isinstance(e, str)

    def test_json_roundtrip_deterministic(self):
        a = report_to_json(classify(2, 3277))
        b = report_to_json(classify(2, 3277))
        assert a == b
        assert json.loads(a)["verdicts"]["over"] is True

    def test_csv_shape(self):
        header, row = report_to_csv(classify(2, 341)).splitlines()
        assert header.startswith("n,base,")
        fields = row.split(",")
        assert fields[0] == "341" and fields[2] == "True" and fields[3] == "False"

    def test_text_contains_verdicts(self):
        text = report_to_text(classify(2, 1093**2))
        assert "over = true" in text
        assert "wieferich = prime 1093, order 1" in text

    def test_incomplete_marker(self):
        text = report_to_text(classify(2, 1000000007 * 1000000403,
                                       factor_budget=10))
        assert "incomplete = true" in text

    def test_family_dict(self):
        d = family_to_dict(gen_mersenne(2, 11))
        assert d["family"] == "GeneralizedMersenne"
        assert d["value"] == "2047" and d["primover"] is True


class TestBFileParsing:
    def test_basic(self, tmp_path):
        f = tmp_path / "b.txt"
        f.write_text("# comment\n1 2047\n2 3277\n\n3 4033\n")
        entries = parse_bfile(f)
        assert [(e.index, e.value) for e in entries] == [
            (1, 2047), (2, 3277), (3, 4033)]

    def test_rejects_extra_fields(self, tmp_path):
        f = tmp_path / "b.txt"
        f.write_text("1 2047 extra\n")
        with pytest.raises(BFileFormatError) as err:
            parse_bfile(f)
        assert err.value.line_no == 1

    def test_rejects_non_integer(self, tmp_path):
        f = tmp_path / "b.txt"
        f.write_text("1 two\n")
        with pytest.raises(BFileFormatError):
            parse_bfile(f)

    def test_rejects_non_increasing_index(self, tmp_path):
        f = tmp_path / "b.txt"
        f.write_text("1 2047\n1 3277\n")
        with pytest.raises(BFileFormatError) as err:
            parse_bfile(f)
        assert err.value.line_no == 2

    def test_empty_file(self, tmp_path):
        f = tmp_path / "b.txt"
        f.write_text("# only a comment\n")
        assert parse_bfile(f) == []
