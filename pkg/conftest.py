"""
Path: conftest.py
"""

import importlib.util
import os
import pathlib

os.environ.setdefault("TTC_ENV", "test")

# Expose the shared solver fixtures project-wide (tree/tests, bvp/tests, cli/tests, ...).
#
# `process_model/tests/conftest.py` is also auto-discovered by pytest as a directory-scoped
# conftest, since it lives inside a testpath declared in pytest.ini. Listing it in
# `pytest_plugins` would register the same module object under two plugin names, which
# pluggy rejects. Loading it here from its file path, as an independent module object
# under a name that does not end in "conftest.py", registers it as a global plugin.
_SHARED_CONFTEST_PATH = pathlib.Path(__file__).parent / "process_model" / "tests" / "conftest.py"


def pytest_configure(config):
    """Register `process_model/tests/conftest.py`'s fixtures project-wide."""
    pluginmanager = config.pluginmanager
    plugin_name = "process_model.tests.shared_fixtures"
    if pluginmanager.get_plugin(plugin_name) is not None:
        return

    spec = importlib.util.spec_from_file_location(plugin_name, _SHARED_CONFTEST_PATH)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    pluginmanager.register(module, name=plugin_name)
