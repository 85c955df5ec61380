"""
Services Package
================

This package contains the business logic of the tangency criterion
toolkit. Every service is a module of pure functions over the immutable
values in ``models``.

Available Services:
    - word_service: Word inversion, cyclic reduction and canonical forms
    - whitehead_service: Whitehead move enumeration, application and reduction
    - criterion_service: Condition (A) and the decision pipeline
    - oracle_service: Brute-force certification and random campaigns
    - model_catalog: Finite model enumeration per genus
    - document_parser: Tangency document parsing and rendering
    - report_service: Text and JSON rendering of results
    - errors: Exception hierarchy and exit codes

Usage:
    from services.criterion_service import verdict
    from services.whitehead_service import reduce
    from services.oracle_service import bfs_explore, run_campaign
    from services.model_catalog import enumerate_models
"""
