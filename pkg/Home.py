"""
Home Page - Tangency Criterion Workbench
========================================

This is the main entry point for the Streamlit application.
Streamlit automatically discovers this file and uses the pages/ directory
for multi-page navigation.

The home page provides:
- Application title and a short description of the criterion
- Links to the three workbench pages
- The input format at a glance

Usage:
    streamlit run Home.py
"""

import streamlit as st

# ---------------------------------------------------------------------------
# Page Configuration
# ---------------------------------------------------------------------------
st.set_page_config(
    page_title="Tangency Criterion Workbench",
    page_icon="🍩",
    layout="wide"
)

# ---------------------------------------------------------------------------
# Session Initialization
# ---------------------------------------------------------------------------
from components.session import init_session
init_session()

# ---------------------------------------------------------------------------
# Main Content
# ---------------------------------------------------------------------------
st.title("🍩 Tangency Criterion Workbench")
st.markdown(
    "Decide, from the words read off the tangency curves of an isolating-block "
    "handlebody, whether its maximal invariant set must have nontrivial "
    "one-dimensional cohomology."
)

st.markdown("### 🚀 Quick Access")

col1, col2, col3 = st.columns(3)

with col1:
    with st.container(border=True):
        st.markdown("### 🔎 Criterion Check")
        st.caption("Whitehead-reduce a word set, inspect the trace and test condition (A).")
        st.page_link("pages/1_Criterion_Check.py", label="Open →", icon="🔎")

with col2:
    with st.container(border=True):
        st.markdown("### 📚 Model Catalog")
        st.caption("Finite list of curve patterns compatible with the criterion, per genus.")
        st.page_link("pages/2_Model_Catalog.py", label="Open →", icon="📚")

with col3:
    with st.container(border=True):
        st.markdown("### 🧪 Oracle Campaign")
        st.caption("Certify greedy reduction against brute-force search on random instances.")
        st.page_link("pages/3_Oracle_Campaign.py", label="Open →", icon="🧪")

st.divider()

st.markdown("### ✏️ Input Format")
st.code(
    "# comment\n"
    "genus 2\n"
    "x1 x2 x1 x2 x2      # token form\n"
    "ABB                 # compact form: a..z = x1..x26, capitals are inverses\n"
    "1                   # an inessential t-curve",
    language="text",
)
st.caption(
    "Read each t-curve oriented as the boundary of the exit region. "
    "Inverting a whole word never changes the verdict."
)
