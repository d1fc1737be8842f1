import os

from configs.config import DevelopmentConfig as dev_config
from configs.config import ProductionConfig as prod_config
from configs.config import TestingConfig as test_config

config = {
    "development": dev_config,
    "production": prod_config,
    "testing": test_config,
    "default": dev_config,
}


def active_config():
    """Configuration class selected by APP_ENV."""
    return config.get(os.getenv("APP_ENV", "default"), dev_config)
