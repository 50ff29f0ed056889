"""Plugin manager and hook markers.

Hook definitions are functions marked with :func:`hookdef`, hook
implementations are functions or methods marked with :func:`hookimpl`
and carrying the same name.  The :class:`PluginManager` ties the two
together for the command line tool, where every hook may have many
implementations: ``pluginmanager.hooks.scckit_configure(config=c)``.

The exploration engines use the same markers with a different
binding.  An exploration has exactly one set of handlers, so instead
of relaying calls :func:`bindstubs` resolves an object's marked
handlers into a flat namespace of plain callables, with ``None`` for
every handler the object does not provide.

"""

import inspect
import itertools
import types


def _mark(attr, func, detail):
    if func:
        assert len(func) == 1
        assert inspect.isroutine(func[0])
        func = func[0]
        detail.update(name=func.__name__)
        setattr(func, attr, detail)
        return func

    def _marker(func):          # pylint: disable=missing-docstring
        detail.update(name=func.__name__)
        setattr(func, attr, detail)
        return func
    return _marker


def hookdef(*func, firstresult=False):
    """Mark a function as a hook definition.

    Usable bare, ``@hookdef``, or with keywords,
    ``@hookdef(firstresult=True)``.

    :firstresult: Stop at the first implementation returning something
       other than ``None`` and return that value instead of a list.

    """
    return _mark('pm_hookdef', func, {'firstresult': firstresult})


def hookimpl(*func):
    """Mark a function or method as a hook implementation."""
    return _mark('pm_hookimpl', func, {})


def _hookdefs(spec):
    defs = {}
    for name, routine in inspect.getmembers(spec):
        if hasattr(routine, 'pm_hookdef'):
            assert name == routine.pm_hookdef['name']
            defs[name] = routine
    return defs


def bindstubs(spec, obj, required=(), skip=()):
    """Bind the marked handlers of obj against the definitions in spec.

    :param spec: Module or class holding :func:`hookdef` definitions.
    :param obj: Object whose :func:`hookimpl` methods are the handlers.
    :param required: Names which must be provided by obj.
    :param skip: Names to bind to ``None`` even when obj provides them.

    :returns: A namespace with one attribute per definition, either
       the bound handler or ``None``.

    :raises ValueError: If obj marks a handler spec does not define,
       or a required handler is missing.
    :raises TypeError: If a handler's parameters differ from its
       definition.  Engines call handlers positionally so the names
       and their order must match exactly.

    """
    defs = _hookdefs(spec)
    stubs = types.SimpleNamespace(**{name: None for name in defs})
    for name, routine in inspect.getmembers(obj):
        if not hasattr(routine, 'pm_hookimpl'):
            continue
        if name not in defs:
            raise ValueError(
                'Found unknown stub in {!r}: {}'.format(obj, name))
        expected = list(inspect.signature(defs[name]).parameters)
        actual = list(inspect.signature(routine).parameters)
        if actual != expected:
            raise TypeError('Stub {} takes ({}), expected ({})'.format(
                name, ', '.join(actual), ', '.join(expected)))
        if name not in skip:
            setattr(stubs, name, routine)
    missing = [name for name in required if getattr(stubs, name) is None]
    if missing:
        raise ValueError('Missing required stubs in {!r}: {}'.format(
            obj, ', '.join(missing)))
    return stubs


class PluginManager:
    """Registry of plugins and relay of hook calls.

    Attributes:

    :hooks: Namespace with a :class:`HookCaller` per hook definition,
       call as ``pluginmanager.hooks.name(arg=value)``.

    """

    def __init__(self, hookspec=None):
        """Create a plugin manager.

        :param hookspec: Optional module or class of hook definitions,
           the same as calling :meth:`addhooks`.

        """
        self._plugins = {}
        self._plugin_count = itertools.count()
        self.register_callback = None
        self.tracer_cb = None
        self._hookrelay = HookRelay(self._trace, hookspec)
        self.hooks = self._hookrelay.hooks

    def _trace(self, msg):
        if self.tracer_cb:
            self.tracer_cb(msg)

    def register(self, obj, name=None):
        """Register a module, class or instance as a plugin.

        :param name: Plugin name, defaults to ``obj.__name__``.

        :returns: The new :class:`Plugin`.

        :raises ValueError: If no name can be found, the name is
           taken or obj implements an unknown hook.

        """
        if not name:
            try:
                name = obj.__name__
            except AttributeError:
                raise ValueError('Missing plugin name') from None
        if name in self._plugins:
            raise ValueError('Plugin already registered: {}'.format(name))
        plugin = Plugin(obj, name, next(self._plugin_count))
        self._trace('Registering plugin: {}'.format(plugin))
        self._hookrelay.addplugin(plugin)
        self._plugins[name] = plugin
        if self.register_callback:
            self.register_callback(plugin)
        return plugin

    def unregister(self, plugin):
        """Remove a plugin given as Plugin, name or object."""
        plugin = self.getplugin(plugin)
        self._plugins.pop(plugin.name)
        self._hookrelay.removeplugin(plugin)

    def isregistered(self, plugin):
        """Return whether a plugin given as Plugin, name or object is known."""
        try:
            self.getplugin(plugin)
        except LookupError:
            return False
        return True

    def getplugin(self, plugin):
        """Return the :class:`Plugin` for a Plugin, name or object.

        :raises LookupError: If the plugin is not registered.

        """
        if isinstance(plugin, Plugin):
            if self._plugins.get(plugin.name) is plugin:
                return plugin
        elif isinstance(plugin, str):
            if plugin in self._plugins:
                return self._plugins[plugin]
        else:
            for box in self._plugins.values():
                if box.obj is plugin:
                    return box
        raise LookupError('Plugin not registered: {}'.format(plugin))

    def addhooks(self, hookspec):
        """Add the hook definitions found in a module or class."""
        self._hookrelay.addhooks(hookspec)


class Plugin:
    """Container for a registered plugin object.

    Attributes:

    :obj: The module, class or instance providing the hooks.
    :name: The registered name.
    :index: Registration order, hooks of earlier plugins run first.
    :hooks: List of :class:`HookImpl` the plugin provides.

    """

    def __init__(self, obj, name, index):
        self.obj = obj
        self.name = name
        self.index = index
        self.hooks = [HookImpl(routine, self)
                      for _, routine in inspect.getmembers(obj)
                      if hasattr(routine, 'pm_hookimpl')]

    def __repr__(self):
        return '<Plugin {}>'.format(self.name)


class HookImpl:
    """One hook implementation of a plugin."""

    def __init__(self, routine, plugin):
        self.routine = routine
        self.plugin = plugin
        self.name = routine.pm_hookimpl['name']
        self.argnames = list(inspect.signature(routine).parameters)

    def __repr__(self):
        return '<HookImpl {}:{}>'.format(self.plugin.name, self.name)


class HookRelay:
    """Creates a :class:`HookCaller` per definition and feeds it plugins.

    :param trace: Callable receiving short trace messages.

    """

    def __init__(self, trace, hookspec=None):
        self.hooks = types.SimpleNamespace()
        self._trace = trace
        if hookspec:
            self.addhooks(hookspec)

    def addhooks(self, hookspec):
        """Add the definitions of a hookspec module or class.

        :raises ValueError: On a duplicate name or when hookspec
           defines no hooks at all.

        """
        defs = _hookdefs(hookspec)
        if not defs:
            raise ValueError('No new hooks found in {!r}'.format(hookspec))
        for name, routine in defs.items():
            if hasattr(self.hooks, name):
                raise ValueError(
                    'Hook already exists for name: {}'.format(name))
            setattr(self.hooks, name, HookCaller(routine, self._trace))
            self._trace('Added hookdef {} from {}'.format(name, hookspec))

    def addplugin(self, plugin):
        """Add the hook implementations of a :class:`Plugin`."""
        for impl in plugin.hooks:
            try:
                hook = getattr(self.hooks, impl.name)
            except AttributeError:
                raise ValueError('Found unknown hook in {}: {}'.format(
                    plugin, impl.name)) from None
            hook.addimpl(impl)

    def removeplugin(self, plugin):
        """Remove the hook implementations of a :class:`Plugin`."""
        for impl in plugin.hooks:
            getattr(self.hooks, impl.name).removeimpl(impl)


class HookCaller:
    """Calls every implementation of one hook definition.

    Attributes:

    :name: The hook name.
    :firstresult: Return the first non-None result instead of a list
       of all non-None results.

    """

    def __init__(self, hookdef_func, trace):
        self._trace = trace
        self._hooks = []
        self._argnames = list(inspect.signature(hookdef_func).parameters)
        self.name = hookdef_func.pm_hookdef['name']
        self.firstresult = hookdef_func.pm_hookdef['firstresult']

    def addimpl(self, impl):
        """Add a :class:`HookImpl`, keeping plugin registration order.

        :raises ValueError: If impl is already present.
        :raises TypeError: If impl accepts arguments the definition
           does not have.

        """
        if impl in self._hooks:
            raise ValueError(
                'Hook implementation already registered: {!r}'.format(impl))
        unknown = set(impl.argnames) - set(self._argnames)
        if unknown:
            raise TypeError('Hook {} accepts unknown arguments: {}'.format(
                impl, ', '.join(sorted(unknown))))
        self._hooks.append(impl)
        self._hooks.sort(key=lambda hook: hook.plugin.index)
        self._trace('Added hook: {}'.format(impl))

    def removeimpl(self, impl):
        """Remove a :class:`HookImpl`, ValueError if not present."""
        self._hooks.remove(impl)

    def __call__(self, **kwargs):
        extra = set(kwargs) - set(self._argnames)
        if extra:
            raise TypeError('{!r} call has extra args: {}'.format(
                self, ' '.join(sorted(extra))))
        results = []
        for hook in self._hooks:
            self._trace('Calling hook: {}'.format(hook))
            res = hook.routine(*[kwargs.get(name) for name in hook.argnames])
            if res is not None:
                if self.firstresult:
                    return res
                results.append(res)
        if self.firstresult:
            return None
        return results

    def __repr__(self):
        return '<HookCaller {}({})>'.format(
            self.name, ', '.join(self._argnames))
