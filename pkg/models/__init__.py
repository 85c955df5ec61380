"""
Models Package
==============

This package contains the value classes shared by every service of the
tangency criterion toolkit. All of them are immutable after construction.

Available Models:
    - Letter, Word, CyclicWord: the alphabet and words of a rank-g free group
    - TangencySet: genus plus the words read off the t-curves
    - PermutationMove, MultiplierMove, ReductionTrace: Whitehead substitutions
    - OccurrenceReport, Verdict, Interpretation: the decision record
    - Exploration, Certification: results of a brute-force oracle search
    - ModelClass: one class of the finite model catalogue
    - InputDocument: a parsed tangency-data file

Usage:
    from models.word import Letter, Word, CyclicWord
    from models.tangency_set import TangencySet
    from models.whitehead_move import MultiplierMove, PermutationMove
    from models.verdict import Verdict
"""
