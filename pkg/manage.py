#!/usr/bin/env python
"""管理入口：python manage.py test entangle / python manage.py solve --q 4 --f 0,1,0,0,0"""
import sys

from geoment.__main__ import main

if __name__ == "__main__":
    main(sys.argv, prog="manage.py")
