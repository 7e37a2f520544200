import json
import math

import numpy as np
import pytest

from hexaweb import scene, svg
from hexaweb.errors import DegenerateTriangle


def test_dumps_is_valid_json_with_full_precision():
    obj = {"a": 0.1, "b": [1, 2.5, -0.0], "c": {"d": np.float64(1 / 3)}, "e": float("nan"), "f": True, "g": None, "h": np.array([[1.0, 2.0]])}
    text = scene.dumps(obj)
    back = json.loads(text)
    assert back["a"] == 0.1
    assert back["c"]["d"] == 1 / 3
    assert back["e"] is None
    assert "-0" not in text
    assert back["h"] == [[1.0, 2.0]]
    with pytest.raises(TypeError):
        scene.dumps({"x": object()})


def test_default_scene_layout():
    data = scene.build_scene(scene.SceneSpec(sides=(5, 3, 4), rings=1))
    assert set(data) >= {"seed", "hexagons", "triangles", "centers"}
    assert data["seed"]["S"] == pytest.approx(12)
    t = next(t for t in data["triangles"] if t["ijp"] == [0, 0, "up"])
    assert set(t) == {"ijp", "vertices", "signed_area", "centers"}
    assert t["signed_area"] == pytest.approx(6)
    assert len(data["hexagons"][0]["vertices"]) == 6


def test_full_scene_round_trips_through_json():
    spec = scene.SceneSpec(sides=(5, 3, 4), constructions=scene.CONSTRUCTIONS, p=(0.3, 1.7), samples=12)
    data = scene.build_scene(spec)
    for key in ("focal", "parabolas", "skip1", "directrices", "satellites", "second_level", "poncelet"):
        assert key in data
    assert data["rings"] == 2
    back = json.loads(scene.dumps(data))
    assert back["focal"]["s"] == pytest.approx(math.sqrt(3 / 32 * (50 - 24 * math.sqrt(3))))
    assert len(back["poncelet"]["members"]) == 12
    sat = back["satellites"]
    assert sat["area_sum"] == pytest.approx(sat["hexagon_area"], rel=1e-12)


def test_vertices_spec_and_degenerate_seed():
    data = scene.build_scene(scene.SceneSpec(vertices=(0, 0, 0, 3, 4, 0), constructions=("flanks",)))
    assert data["seed"]["S"] > 0
    assert len(data["triangles"]) == 4
    with pytest.raises(DegenerateTriangle):
        scene.build_scene(scene.SceneSpec(vertices=(0, 0, 1, 1, 2, 2)))


def test_svg_layers_and_determinism():
    data = scene.build_scene(scene.SceneSpec(sides=(5, 3, 4), constructions=("grid", "parabolas", "focal", "directrices"), rings=2))
    a = svg.render(data, timestamp=False)
    b = svg.render(data, timestamp=False)
    assert a == b
    assert a.startswith('<?xml version="1.0" encoding="UTF-8"?>\n<svg ')
    for layer in ("hexagons", "flanks", "seed", "parabolas", "directrices", "equilaterals", "foci", "centers"):
        assert f'<g id="{layer}">' in a
    stamped = svg.render(data)
    assert "<!-- generated " in stamped.splitlines()[1]
