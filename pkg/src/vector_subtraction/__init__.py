"""Outcome computation and geometry for finite vector subtraction games.

A vector subtraction game is played on d-tuples of nonnegative integers.
A move subtracts one vector of a finite ruleset, keeping every
component nonnegative; under normal play the player who cannot move
loses. This package provides:

* :py:mod:`vector_subtraction.model`, rulesets and their classification;
* :py:mod:`vector_subtraction.oracle`, the dynamic-programming ground
  truth and grid verifiers for the known P-to-P lemmas;
* :py:mod:`vector_subtraction.closed_form`, constant-memory solvers for
  one-move and two-move rulesets;
* :py:mod:`vector_subtraction.periodicity`, eventual period detection;
* :py:mod:`vector_subtraction.automaton`, coloring schemes that paint
  the P-positions of an outcome segment;
* :py:mod:`vector_subtraction.analysis`, boundary estimation,
  segmentation checks and N-percolation;
* :py:mod:`vector_subtraction.render` and :py:mod:`vector_subtraction.cli`,
  file formats and the ``vector-subtraction`` command.

.. code-block:: python

    from vector_subtraction.model import parse_ruleset
    from vector_subtraction.oracle import compute_grid
    from vector_subtraction.closed_form import solve_two_move_2d

    ruleset = parse_ruleset("2,1;1,3")
    grid = compute_grid(ruleset, 10, 10)
    assert grid.outcome(3, 5) == solve_two_move_2d(ruleset, 3, 5)
"""

__version__ = "0.1.0"
