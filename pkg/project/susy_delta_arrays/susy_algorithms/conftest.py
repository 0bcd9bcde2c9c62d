'''Test configuration of the SUSY delta arrays algorithms.

The modules import each other by their flat names, so the folder is added
to the path before the tests are collected.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

import json
import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))

import susy_data_model_delta_arrays  # noqa: E402

# -----------------------------------------------------------------------------


@pytest.fixture
def double_equal_config():
    """Two equal deltas, alpha = 2 and a = 7."""

    return susy_data_model_delta_arrays.DoubleEqual(2.0, 7.0)


@pytest.fixture
def config_file(tmp_path):
    """Writes a configuration JSON file and returns its path."""

    def write(data, name='config.json'):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return write
