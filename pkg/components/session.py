"""
Session Helpers
===============

This module keeps workbench state in Streamlit's session_state so that a
document typed on one page is still there after navigating away.

Functions:
    - init_session: Initialize session state keys with defaults
    - current_document: Text of the last document worked on
    - remember_document: Store document text for the other pages
    - sample_documents: Bundled sample documents from data/

Usage:
    from components.session import init_session, current_document
    init_session()
    text = current_document()
"""

from pathlib import Path

import streamlit as st

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

DEFAULT_DOCUMENT = """genus 2
x1 x2 x1 x2 x2
x1^-1 x2^-1 x2^-1
x1^-1 x2^-1
"""


def init_session():
    """
    Initialize session state for the workbench.

    Sets st.session_state.document_text and st.session_state.last_campaign
    if they are not already set.
    """
    if "document_text" not in st.session_state:
        st.session_state.document_text = DEFAULT_DOCUMENT
    if "last_campaign" not in st.session_state:
        st.session_state.last_campaign = None


def current_document() -> str:
    init_session()
    return st.session_state.document_text


def remember_document(text: str):
    st.session_state.document_text = text


def sample_documents() -> dict[str, str]:
    """
    Bundled sample documents.

    Returns:
        dict: file name -> document text, sorted by name
    """
    if not DATA_DIR.is_dir():
        return {}
    return {p.name: p.read_text(encoding="utf-8") for p in sorted(DATA_DIR.glob("*.txt"))}
