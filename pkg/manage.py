#!/usr/bin/env python
"""Точка входа: python manage.py stopline <подкоманда> <файл конфигурации>"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings.development')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            'Django не найден: установите зависимости из requirements.txt '
            'в активное виртуальное окружение'
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
