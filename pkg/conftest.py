"""pytest 入口：与 manage.py 一样加载 geoment.settings 并初始化 Django。"""
import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "geoment.settings")
django.setup()
