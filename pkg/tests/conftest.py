"""Shared fixtures: in-process CLI runner and family file helper."""

import json

import pytest

from intersum.cli import main
from intersum.setcore import family_to_dict


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process and return (exit_code, stdout, stderr)."""

    def run(*argv):
        code = main([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run


@pytest.fixture
def family_file(tmp_path):
    """Write a family to a JSON file under tmp_path, return its path."""

    counter = iter(range(10_000))

    def write(family, name=None):
        path = tmp_path / (name or f"fam{next(counter)}.json")
        path.write_text(json.dumps(family_to_dict(family)))
        return str(path)

    return write
