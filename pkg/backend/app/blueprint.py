class Blueprint:
    """
    A named group of scenario command handlers.

    Handlers are registered with ``@bp.command('verb')`` and take
    ``(command, workspace)``, returning an Outcome.
    """

    def __init__(self, name, import_name):
        self.name = name
        self.import_name = import_name
        self.handlers = {}

    def command(self, verb):
        def decorator(handler):
            if verb in self.handlers:
                raise ValueError(f"{self.name}: command {verb!r} registered twice")
            self.handlers[verb] = handler
            return handler
        return decorator
