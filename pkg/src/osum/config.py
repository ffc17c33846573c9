"""Run configuration for the CLI and the HTTP service.

Settings come from an INI-style key=value file (section [osum]); the
OSUM_CONFIG environment variable points at it when --config is not
given.  Every referenced path must exist at load time.
"""

from __future__ import annotations

import configparser
import os
from dataclasses import dataclass, fields

SECTION = "osum"


@dataclass
class RunConfig:
    lexicon: str | None = None
    ontology: str | None = None
    stopwords: str | None = None
    corpus: str | None = None
    function: str = "a1"
    alpha: float = 0.5
    r: float = 1.0
    budget: int = 200
    gamma_sat: float = 0.25
    lambda0: float = 1.0
    extractors: str = "tfidf,rake,textrank"
    output_format: str = "text"
    port: int = 8080
    static_dir: str | None = None

    _PATH_FIELDS = ("lexicon", "ontology", "stopwords", "corpus", "static_dir")

    def validate(self) -> "RunConfig":
        for name in self._PATH_FIELDS:
            value = getattr(self, name)
            if value is not None and not os.path.exists(value):
                raise FileNotFoundError(f"config path {name} does not exist: {value}")
        if self.function not in ("a1", "a2", "a3", "a4", "a5"):
            raise ValueError(f"config function must be a1..a5, got {self.function!r}")
        known = {"tfidf", "rake", "textrank"}
        chosen = {s.strip() for s in self.extractors.split(",") if s.strip()}
        if not chosen or not chosen <= known:
            raise ValueError(f"config extractors must name a subset of {sorted(known)}")
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError("config alpha must lie in [0, 1]")
        if self.r < 0:
            raise ValueError("config r must be >= 0")
        if self.budget < 0:
            raise ValueError("config budget must be >= 0")
        if self.output_format not in ("text", "json", "csv"):
            raise ValueError("config output_format must be text|json|csv")
        return self

    @classmethod
    def load(cls, path: str | None = None) -> "RunConfig":
        """Read the config file at path, $OSUM_CONFIG, or defaults."""
        if path is None:
            path = os.environ.get("OSUM_CONFIG")
        if path is None:
            return cls().validate()
        parser = configparser.ConfigParser()
        read = parser.read(path)
        if not read:
            raise FileNotFoundError(f"config file not found: {path}")
        section = parser[SECTION] if parser.has_section(SECTION) else parser["DEFAULT"]
        kwargs = {}
        for f in fields(cls):
            if f.name.startswith("_") or f.name not in section:
                continue
            raw = section[f.name]
            if f.name in ("alpha", "r", "gamma_sat", "lambda0"):
                kwargs[f.name] = float(raw)
            elif f.name in ("budget", "port"):
                kwargs[f.name] = int(raw)
            else:
                kwargs[f.name] = raw
        return cls(**kwargs).validate()
