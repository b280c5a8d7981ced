# SPDX-License-Identifier: Apache-2.0

"""Jinja2 rendering of the bundled text templates"""

import os

from jinja2 import Template


def _get_template(name: str) -> str:
    """Load a template file from the package's templates directory"""
    template_path = os.path.join(os.path.dirname(__file__), '..', 'templates', name)
    with open(template_path, 'r', encoding='utf-8') as f:
        return f.read()


def render_template(name: str, **context) -> str:
    """Render a bundled template; trailing whitespace on each line is dropped"""
    text = Template(_get_template(name), trim_blocks=True, lstrip_blocks=True).render(**context)
    return "\n".join(line.rstrip() for line in text.splitlines())
