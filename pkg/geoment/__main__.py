"""
-*- coding: utf-8 -*-
 @Author: lee
 @ProjectName: geoment
 @FileName: __main__.py
 @DateTime: 2024/3/11 10:05
 @Docs: 命令行入口：python -m geoment <solve|dicke-sweep|variance-study|evenodd-sweep|census|oracle-check>
"""
import os
import sys


def main(argv=None, prog="geoment"):
    """Run geoment subcommands."""
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "geoment.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    argv = list(sys.argv if argv is None else argv)
    argv[0] = prog
    # 子命令用连字符书写，Django 命令模块名用下划线
    if len(argv) > 1 and not argv[1].startswith("-"):
        argv[1] = argv[1].replace("-", "_")
    execute_from_command_line(argv)


if __name__ == "__main__":
    main()
