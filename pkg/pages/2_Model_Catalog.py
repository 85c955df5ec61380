"""
Model Catalog - Finite Models per Genus
=======================================

This page lists the condition-(A) word-set classes of one genus up to
signed generator permutations, together with the comparison against the
hand-drawn catalogue where one exists.
"""

import streamlit as st

# ---------------------------------------------------------------------------
# Session Initialization
# ---------------------------------------------------------------------------
from components.session import init_session
init_session()

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
from components.charts import models_figure
from services.model_catalog import INTERACTIVE_MAX_GENUS, catalog_note, enumerate_models, models_frame

st.title("📚 Model Catalog")
st.caption("Curve patterns compatible with the geometric criterion")

genus = st.slider("Genus", min_value=0, max_value=INTERACTIVE_MAX_GENUS, value=2,
                  help="Larger genera are available from the command line: tangency models --genus g")


@st.cache_data
def _catalog(g: int):
    classes = enumerate_models(g)
    return classes, catalog_note(g, classes)


classes, note = _catalog(genus)

metric_cols = st.columns(3)
with metric_cols[0]:
    st.metric("Classes", len(classes))
with metric_cols[1]:
    st.metric("Nonempty Classes", sum(1 for m in classes if not m.is_empty))
with metric_cols[2]:
    st.metric("Whitehead-Minimal", sum(1 for m in classes if not m.is_empty and m.minimal))

if note:
    st.warning(f"📝 {note}")

st.dataframe(models_frame(classes), hide_index=True, width='stretch')
st.plotly_chart(models_figure(classes), width='stretch')
