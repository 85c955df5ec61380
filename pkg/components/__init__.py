"""
Components Package
==================

This package contains reusable UI components and helper functions
shared across multiple pages in the workbench.

Available Components:
    - init_session: Initialize workbench session state
    - current_document / remember_document: Share the document between pages
    - trace_figure, occurrences_figure, campaign_figure, models_figure:
      plotly figure builders

Usage:
    from components.session import init_session
    from components.charts import trace_figure
    init_session()
"""
