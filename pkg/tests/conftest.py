import json

import pytest


@pytest.fixture
def config_file(tmp_path):
    """Write a configuration JSON file and return its path as a string."""

    def _write(rows, ambient_rank=None, name="config.json"):
        rank = ambient_rank if ambient_rank is not None else len(rows[0])
        payload = {
            "ambient_rank": rank,
            "points": [[str(x) for x in row] for row in rows],
        }
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)

    return _write
