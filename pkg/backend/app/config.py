import os
from dotenv import load_dotenv

load_dotenv()


def _flag(name, default='false'):
    return os.getenv(name, default).lower() in ('1', 'true', 'yes')


class Config:
    # Common configurations
    DEBUG = _flag('CORRCANCEL_DEBUG')
    TESTING = False
    LOG_LEVEL = os.getenv('CORRCANCEL_LOG_LEVEL', 'WARNING').upper()
    LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

    # Ground field and seeding
    FIELD = os.getenv('CORRCANCEL_FIELD', 'Q')
    SEED = int(os.getenv('CORRCANCEL_SEED', '0'))

    # Computation limits
    ARTINIAN_RETRIES = int(os.getenv('CORRCANCEL_ARTINIAN_RETRIES', '8'))
    RHO_SEARCH_CAP = int(os.getenv('CORRCANCEL_RHO_SEARCH_CAP', '64'))
    SUITE_TRIALS = int(os.getenv('CORRCANCEL_SUITE_TRIALS', '50'))

    # Reports
    REPORT_TIMING = _flag('CORRCANCEL_REPORT_TIMING')


class DevelopmentConfig(Config):
    DEBUG = True
    LOG_LEVEL = 'DEBUG'


class TestingConfig(Config):
    TESTING = True
    SUITE_TRIALS = 5
    REPORT_TIMING = False


class ProductionConfig(Config):
    pass


config_by_name = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': Config
}
