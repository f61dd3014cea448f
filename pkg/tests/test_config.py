import logging

import pytest

from tropgroup.config import TropConfig, load_config
from tropgroup.errors import ParseError


def test_missing_file_gives_defaults(tmp_path):
    config = load_config(tmp_path / "config.yaml")
    assert config.closure_cap == 10_000
    assert config.torsion_exponent_cap == 64
    assert config.assume_group is False
    assert config.indent == 2


def test_config_path_lives_in_home(tmp_path):
    assert TropConfig(home=tmp_path).config_path == tmp_path / "config.yaml"


def test_overrides(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("closure_cap: 500\nassume_group: true\nindent: 0\n")
    config = load_config(path)
    assert config.closure_cap == 500
    assert config.assume_group is True
    assert config.indent == 0
    assert config.torsion_exponent_cap == 64


def test_empty_file(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("")
    assert load_config(path).closure_cap == 10_000


def test_unknown_key_warns(tmp_path, caplog):
    path = tmp_path / "config.yaml"
    path.write_text("colour: blue\n")
    with caplog.at_level(logging.WARNING, logger="tropgroup.config"):
        load_config(path)
    assert "colour" in caplog.text


@pytest.mark.parametrize("text", [
    "closure_cap: true\n",
    "closure_cap: 0\n",
    "assume_group: 1\n",
    "torsion_exponent_cap: many\n",
    "- a list\n",
    "closure_cap: [unclosed\n",
])
def test_bad_values(tmp_path, text):
    path = tmp_path / "config.yaml"
    path.write_text(text)
    with pytest.raises(ParseError):
        load_config(path)
