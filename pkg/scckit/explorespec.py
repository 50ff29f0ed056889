"""Handler definitions for depth-first exploration.

An algorithm supplies handlers by marking methods of an object with
:func:`scckit.pm.hookimpl`, named after and taking the same arguments
as the definitions here.  :func:`scckit.pm.bindstubs` resolves them
before an exploration starts.  Only :func:`start`, :func:`unvisited`
and :func:`previsit` are required; every other handler may be left
out and then costs nothing.

Any handler may raise :class:`scckit.dfs.StopExploration` to end the
exploration early, after which :func:`halt` is called.

"""

from scckit.pm import hookdef


#: Handlers every exploration needs.
REQUIRED = ('start', 'unvisited', 'previsit')


@hookdef
def start(n):
    """Mark all vertices 1..n unvisited."""


@hookdef
def unvisited(v):
    """Return True if v has not been previsited yet."""


@hookdef
def search_start(s):
    """A new search starts at the unvisited vertex s."""


@hookdef
def previsit(v):
    """First visit of v.  Must mark v visited."""


@hookdef
def postvisit(v):
    """Second visit of v, after all arcs out of v are retreated."""


@hookdef
def advance(v, a, w):
    """Arc a from the current vertex v to w is advanced along.

    Called before either :func:`tree_advance` or
    :func:`nontree_traverse`.
    """


@hookdef
def tree_advance(v, a, w):
    """Arc a leads to the unvisited w, which is previsited next."""


@hookdef
def nontree_traverse(v, a, w):
    """Arc a leads to the already visited w."""


@hookdef
def tree_retreat(v, a, w):
    """Return to v over tree arc a after w was postvisited."""


@hookdef
def retreat(v, a, w):
    """Retreat over arc a, tree or not, with v current again."""


@hookdef
def halt(path, arcs):
    """The exploration was stopped early.

    :param path: Vertices of the current path, search start first.
       Excludes a vertex whose postvisit raised the stop.
    :param arcs: The tree arcs joining consecutive path vertices.

    """
