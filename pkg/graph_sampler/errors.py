# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

from typing import Optional


class GraphSamplerError(Exception):
    pass


class EdgeListParseError(GraphSamplerError, ValueError):
    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class GraphError(GraphSamplerError, ValueError):
    pass


class SampleSpecError(GraphSamplerError, ValueError):
    pass


class PlanError(GraphSamplerError, ValueError):
    pass
