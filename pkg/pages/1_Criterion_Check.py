"""
Criterion Check - Whitehead Reduction and Condition (A)
=======================================================

This page runs the decision pipeline on one tangency document:
- Document input: paste text, upload a file or load a bundled sample
- Verdict metrics: lengths, essential curves, criterion answer
- Reduction trace: move table and length profile chart
- Occurrence table: letter counts and cut-disk crossings in S_min
- Export: the verdict as JSON and S_min as a new document
"""

import streamlit as st

# ---------------------------------------------------------------------------
# Session Initialization
# ---------------------------------------------------------------------------
from components.session import current_document, init_session, remember_document, sample_documents
init_session()

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
import pandas as pd
from components.charts import occurrences_figure, trace_figure
from services.criterion_service import verdict_for_set
from services.document_parser import document_from_set, parse, render, to_tangency_set
from services.errors import TangencyError
from services.report_service import occurrences_frame, to_json, verdict_document

st.title("🔎 Criterion Check")
st.caption("Whitehead reduction and condition (A)")

# ===========================================================================
# SECTION 1: DOCUMENT INPUT
# ===========================================================================
st.subheader("✏️ Tangency Document")

input_tabs = st.tabs(["✏️ Edit", "📤 Upload", "📥 Samples"])

with input_tabs[1]:
    uploaded = st.file_uploader("Tangency document", type=["txt"])
    if uploaded is not None and st.button("Use Uploaded File"):
        remember_document(uploaded.getvalue().decode("utf-8"))
        st.rerun()

with input_tabs[2]:
    samples = sample_documents()
    if samples:
        choice = st.selectbox("Sample", list(samples.keys()))
        st.code(samples[choice], language="text")
        if st.button("📥 Load Sample", type="secondary"):
            remember_document(samples[choice])
            st.rerun()
    else:
        st.info("No sample documents found in data/.")

with input_tabs[0]:
    text = st.text_area("Document", value=current_document(), height=200)
    remember_document(text)

try:
    document = parse(text, source="workbench")
    verdict = verdict_for_set(to_tangency_set(document))
except TangencyError as e:
    st.error(f"❌ {e}")
    st.stop()

st.divider()

# ===========================================================================
# SECTION 2: VERDICT
# ===========================================================================
st.subheader("📊 Verdict")
metric_cols = st.columns(4)

with metric_cols[0]:
    st.metric("Input Length", verdict.input_set.length)
with metric_cols[1]:
    st.metric("Minimal Length", verdict.s_min.length,
              delta=verdict.s_min.length - verdict.input_set.length or None, delta_color="inverse")
with metric_cols[2]:
    st.metric("Essential Curves", verdict.input_set.essential_count)
with metric_cols[3]:
    st.metric("Inessential Curves", verdict.input_set.inessential_count)

if verdict.criterion_holds:
    st.success(f"✅ **{verdict.interpretation.value}**: {verdict.interpretation.description}")
else:
    st.error(f"⚠️ **{verdict.interpretation.value}**: {verdict.interpretation.description}")

st.markdown("**S_min:** " + (", ".join(f"`{w}`" for w in verdict.s_min.reduced) or "(no essential curves)"))

st.divider()

# ===========================================================================
# SECTION 3: REDUCTION TRACE
# ===========================================================================
st.subheader("📉 Reduction Trace")

trace_col, chart_col = st.columns(2)

with trace_col:
    if verdict.trace.steps:
        trace_df = pd.DataFrame(
            [{"step": n, "move": step.move.describe(), "result": str(step.result), "length": step.length}
             for n, step in enumerate(verdict.trace.steps, start=1)]
        )
        st.dataframe(trace_df, hide_index=True, width='stretch')
    else:
        st.info("The input is already minimal.")

with chart_col:
    st.plotly_chart(trace_figure(verdict.trace), width='stretch')

# ===========================================================================
# SECTION 4: OCCURRENCES
# ===========================================================================
if verdict.genus:
    st.subheader("🔢 Occurrences in S_min")
    occ_col, occ_chart_col = st.columns(2)
    with occ_col:
        st.dataframe(occurrences_frame(verdict), hide_index=True, width='stretch')
        st.caption("Crossings: points where the cut disk of each handle meets the tangency curves.")
    with occ_chart_col:
        st.plotly_chart(occurrences_figure(verdict), width='stretch')

st.divider()

# ===========================================================================
# SECTION 5: EXPORT
# ===========================================================================
st.subheader("💾 Export")
export_cols = st.columns(2)
with export_cols[0]:
    st.download_button("Verdict JSON", to_json(verdict_document(verdict)),
                       file_name="verdict.json", mime="application/json")
with export_cols[1]:
    st.download_button("S_min Document", render(document_from_set(verdict.s_min)),
                       file_name="s_min.txt", mime="text/plain")
