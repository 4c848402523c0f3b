import json
import math

import pytest

from equicoh.serialize import (
    design_to_document,
    document_to_design,
    dumps_stable,
    format_float,
    read_design,
    write_design,
)


class TestFloatFormat:
    def test_seventeen_digits_roundtrip(self):
        for x in (1 / 3, math.sqrt(2 / 3), -math.log(2 / 9), 5e-324, 0.1 + 0.2):
            assert float(format_float(x)) == x

    def test_integral_floats_compact(self):
        assert format_float(2.0) == "2"

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            format_float(float("nan"))
        with pytest.raises(ValueError):
            format_float(float("inf"))


class TestStableJson:
    def test_parses_as_json(self):
        doc = {"a": [1.5, None, True], "b": {"c": "x\"y"}, "d": 3}
        assert json.loads(dumps_stable(doc)) == doc

    def test_deterministic_bytes(self):
        doc = {"v": [0.1, 0.2, 1 / 3]}
        assert dumps_stable(doc) == dumps_stable(doc)

    def test_rejects_unknown_types(self):
        with pytest.raises(TypeError):
            dumps_stable({1, 2})


class TestDesignFiles:
    def test_sic_roundtrip_bitwise(self, hoggar, tmp_path):
        path = tmp_path / "hoggar.json"
        write_design(path, hoggar)
        loaded = read_design(path)
        assert loaded.dim == 8
        assert loaded.provenance is hoggar.provenance
        assert all(a.amps == b.amps for a, b in zip(loaded.kets, hoggar.kets))

    def test_mub_roundtrip_bitwise(self, mub8, tmp_path):
        path = tmp_path / "mub8.json"
        write_design(path, mub8)
        loaded = read_design(path)
        assert loaded.dim == 8
        assert loaded.seed == mub8.seed
        for ba, bb in zip(loaded.bases, mub8.bases):
            assert all(a.amps == b.amps for a, b in zip(ba, bb))

    def test_document_fields(self, hesse, mub3):
        doc = design_to_document(hesse)
        assert doc["kind"] == "sic"
        assert doc["dim"] == 3
        assert doc["provenance"] == "Hesse"
        assert doc["seed"] is None
        assert len(doc["vectors"]) == 9
        assert all(len(vec) == 3 and len(vec[0]) == 2 for vec in doc["vectors"])
        mdoc = design_to_document(mub3)
        assert mdoc["kind"] == "mub"
        assert len(mdoc["vectors"]) == 12  # basis-major order

    def test_repeated_writes_byte_identical(self, hesse, tmp_path):
        p1 = tmp_path / "a.json"
        p2 = tmp_path / "b.json"
        write_design(p1, hesse)
        write_design(p2, hesse)
        assert p1.read_bytes() == p2.read_bytes()

    def test_bad_kind_rejected(self):
        with pytest.raises(ValueError):
            document_to_design({"kind": "nope", "dim": 2, "vectors": []})
