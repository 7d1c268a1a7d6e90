"""
In-memory session store for follow-up questions
"""

import threading
import time
import uuid
from typing import Any, Dict, Optional, Tuple

DEFAULT_TTL = 1800


class SessionStore:
    """Thread-safe map of session id -> value with TTL"""

    def __init__(self, ttl: int = DEFAULT_TTL):
        self.ttl = ttl
        self._sessions: Dict[str, Tuple[Any, float]] = {}
        self._lock = threading.Lock()

    @staticmethod
    def new_id() -> str:
        return uuid.uuid4().hex

    def get(self, session_id: str) -> Optional[Any]:
        """Stored value if the session exists and has not expired"""
        with self._lock:
            if session_id in self._sessions:
                value, expiry = self._sessions[session_id]
                if time.time() < expiry:
                    return value
                # Expired, remove it
                del self._sessions[session_id]
        return None

    def set(self, session_id: str, value: Any, ttl: Optional[int] = None) -> None:
        """Store a value; the TTL restarts on every write"""
        with self._lock:
            self._sessions[session_id] = (value, time.time() + (ttl if ttl is not None else self.ttl))

    def purge(self) -> int:
        """Drop expired sessions and return how many were dropped"""
        now = time.time()
        with self._lock:
            expired = [key for key, (_, expiry) in self._sessions.items() if expiry <= now]
            for key in expired:
                del self._sessions[key]
        return len(expired)

    def clear(self) -> None:
        with self._lock:
            self._sessions.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)
