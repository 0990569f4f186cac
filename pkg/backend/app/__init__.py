import logging
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class CorrCancel:
    """The application object: configuration, logger and registered command handlers."""

    def __init__(self, import_name):
        self.import_name = import_name
        self.config = {}
        self.blueprints = {}
        self.handlers = {}
        self.logger = logging.getLogger(import_name)

    def register_blueprint(self, blueprint):
        clash = set(blueprint.handlers) & set(self.handlers)
        if clash:
            raise ValueError(f"commands registered twice: {', '.join(sorted(clash))}")
        self.blueprints[blueprint.name] = blueprint
        self.handlers.update(blueprint.handlers)

    def parse(self, text):
        from .models.field import FieldSpec
        from .services.scenario_service import ScenarioService
        return ScenarioService.parse_scenario(text, FieldSpec.from_name(self.config['FIELD']))

    def run(self, scenario, seed=None):
        """Run a parsed scenario; returns the list of Reports."""
        from .services.scenario_service import ScenarioService
        seed = self.config['SEED'] if seed is None else seed
        return ScenarioService.run(scenario, self.handlers, seed, self.config)


def create_app(config_name='default'):
    app = CorrCancel(__name__)

    # Load configuration
    from .config import config_by_name
    settings = config_by_name[config_name]
    app.config = {key: getattr(settings, key) for key in dir(settings) if key.isupper()}

    logging.basicConfig(level=app.config['LOG_LEVEL'], format=app.config['LOG_FORMAT'])
    app.logger.setLevel(app.config['LOG_LEVEL'])

    from .services.artinian_service import ArtinianService
    ArtinianService.retries = app.config['ARTINIAN_RETRIES']

    # Register blueprints
    from .routes.scenario_routes import scenario_bp
    from .routes.verify_routes import verify_bp

    app.register_blueprint(scenario_bp)
    app.register_blueprint(verify_bp)

    return app
