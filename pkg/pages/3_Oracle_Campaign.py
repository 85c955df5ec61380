"""
Oracle Campaign - Brute-Force Certification
===========================================

This page certifies the greedy reduction against breadth-first search:
- Single document: certification report for the current document
- Campaign: seeded random instances, result table, chart and CSV export
"""

import streamlit as st

# ---------------------------------------------------------------------------
# Session Initialization
# ---------------------------------------------------------------------------
from components.session import current_document, init_session
init_session()

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
from components.charts import campaign_figure
from services.document_parser import parse, to_tangency_set
from services.errors import TangencyError
from services.oracle_service import (
    DEFAULT_MAX_GENUS,
    DEFAULT_MAX_LENGTH,
    campaign_passed,
    certify,
    run_campaign,
)

st.title("🧪 Oracle Campaign")
st.caption("Greedy Whitehead reduction versus exhaustive search")

tabs = st.tabs(["📄 Current Document", "🎲 Random Campaign"])

# -------------------------------------------------------------------------
# Tab 1: Current Document
# -------------------------------------------------------------------------
with tabs[0]:
    st.code(current_document(), language="text")
    with st.form("certify_form", border=True):
        cols = st.columns(3)
        with cols[0]:
            budget = st.number_input("Node Budget", min_value=1, value=100_000, step=10_000)
        with cols[1]:
            extra = st.number_input("Extra Length Cap", min_value=0, value=0, step=1)
        with cols[2]:
            symmetry = st.checkbox("Identify Symmetric States", value=True)
        submitted = st.form_submit_button("🔍 Certify", type="primary")

    if submitted:
        try:
            s = to_tangency_set(parse(current_document(), source="workbench"))
            with st.spinner("Exploring..."):
                cert = certify(s, s.length + int(extra), int(budget), modulo_symmetry=symmetry)
        except TangencyError as e:
            st.error(f"❌ {e}")
        else:
            metric_cols = st.columns(3)
            with metric_cols[0]:
                st.metric("Greedy Minimum", cert.greedy_length)
            with metric_cols[1]:
                st.metric("Oracle Minimum", cert.exploration.global_min_length)
            with metric_cols[2]:
                st.metric("States Visited", f"{cert.exploration.visited_count:,}")
            if cert.passed:
                st.success("✅ Certified: greedy minimum is global, minimal forms agree and are connected.")
            else:
                st.error(f"⚠️ Not certified: {cert.to_dict()}")
            st.markdown("**Minimal forms:**")
            for form in cert.exploration.minimal_forms:
                st.markdown(f"- `{form}`")

# -------------------------------------------------------------------------
# Tab 2: Random Campaign
# -------------------------------------------------------------------------
with tabs[1]:
    with st.form("campaign_form", border=True):
        cols = st.columns(4)
        with cols[0]:
            count = st.number_input("Cases", min_value=1, value=50, step=10)
        with cols[1]:
            max_genus = st.number_input("Max Genus", min_value=1, max_value=4, value=DEFAULT_MAX_GENUS)
        with cols[2]:
            max_length = st.number_input("Max Length", min_value=1, max_value=12, value=DEFAULT_MAX_LENGTH)
        with cols[3]:
            seed = st.number_input("Seed", min_value=0, value=0, step=1)
        run = st.form_submit_button("▶️ Run Campaign", type="primary")

    if run:
        try:
            with st.spinner("Certifying..."):
                st.session_state.last_campaign = run_campaign(
                    int(count), int(max_genus), int(max_length), int(seed)
                )
        except TangencyError as e:
            st.error(f"❌ {e}")

    df = st.session_state.last_campaign
    if df is not None:
        if campaign_passed(df):
            st.success(f"✅ All {len(df)} cases certified.")
        else:
            st.error("⚠️ Some cases failed certification.")
        st.dataframe(df, height=350, width='stretch')
        st.plotly_chart(campaign_figure(df), width='stretch')
        st.download_button("📥 Download CSV", df.to_csv(index=False),
                           file_name="campaign.csv", mime="text/csv")
