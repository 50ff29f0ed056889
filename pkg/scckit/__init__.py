"""Strong components of directed graphs.

This package finds the strong components of a directed graph with
three linear-time algorithms: :mod:`scckit.tarjan` (low values and a
follower stack), :mod:`scckit.cycle` (merging sets along cycles) and
:mod:`scckit.bidi` (forward and backward passes).  All run on the
interchangeable depth-first engines of :mod:`scckit.dfs`.  Around them
sit condensation and certificate checks in :mod:`scckit.extensions`, a
memory access counter in :mod:`scckit.counting`, test helpers in
:mod:`scckit.testkit` and the ``scckit`` command line tool.

"""
