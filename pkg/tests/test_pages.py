from pathlib import Path

from streamlit.testing.v1 import AppTest

from services.model_catalog import INTERACTIVE_MAX_GENUS

PAGES_DIR = Path(__file__).resolve().parent.parent / "pages"


def test_model_catalog_page_caps_genus():
    at = AppTest.from_file(str(PAGES_DIR / "2_Model_Catalog.py"), default_timeout=60)
    at.run()
    assert not at.exception
    assert INTERACTIVE_MAX_GENUS == 3
    assert at.slider[0].max == INTERACTIVE_MAX_GENUS
    assert [m.value for m in at.metric] == ["6", "5", "4"]
