"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: settings.py
 @DateTime: 2024/3/11 9:42
 @Docs: 项目配置：求解器/oracle 默认参数、日志
"""
import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# 只用于命令行和测试，不对外提供服务
SECRET_KEY = os.getenv('GEOMENT_SECRET_KEY', 'geoment-local-only')

DEBUG = False

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    "entangle.apps.EntangleConfig",
]

# 没有持久化层，测试使用 SimpleTestCase
DATABASES = {}

LANGUAGE_CODE = "zh-hans"

TIME_ZONE = "Asia/Shanghai"

USE_I18N = True

USE_TZ = False

# 求解器参数，键名与 entangle.conf.SolverOptions 字段一致
GEOMENT_SOLVER = {
    'n_starts': 64,
    'max_iters': 100,
    'tol': 1e-10,
    'workers': int(os.getenv('GEOMENT_WORKERS', '1')),
}

# 穷举校验（oracle）参数，键名与 entangle.conf.OracleOptions 字段一致
GEOMENT_ORACLE = {
    'n_starts': 32,
    'max_sweeps': 500,
    'workers': int(os.getenv('GEOMENT_WORKERS', '1')),
}

# 日志目录，默认 BASE_DIR/logs
LOG_DIR = Path(os.getenv('GEOMENT_LOG_DIR', BASE_DIR / 'logs'))
LOG_DIR.mkdir(parents=True, exist_ok=True)
LOG_LEVEL = os.getenv('GEOMENT_LOG_LEVEL', 'INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name} {process:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        # 控制台只输出告警，保证命令的 stdout 可以直接重定向成 CSV/JSON
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'file': {
            'level': LOG_LEVEL,
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOG_DIR / 'geoment.log',
            'maxBytes': 5 * 1024 * 1024,
            'backupCount': 5,
            'encoding': 'utf-8',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'entangle': {
            'handlers': ['console', 'file'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'pub': {
            'handlers': ['console', 'file'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
