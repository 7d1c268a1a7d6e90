#!/usr/bin/env python3
"""
Run the FastAPI development server
"""

import uvicorn

from src.utils.config import get_config

if __name__ == "__main__":
    config = get_config()
    uvicorn.run(
        "src.api.app:app",
        host=config.get("api.host", "0.0.0.0"),
        port=config.get("api.port", 5000),
        reload=True,
        log_level="info"
    )
