import asyncio

import httpx
import pytest

from twincover.service import create_app


class ServiceClient:
    """Synchronous wrapper over the ASGI app, same transport the CLI uses."""

    def __init__(self):
        self.app = create_app()

    def request(self, method, path, **kwargs):
        async def go():
            transport = httpx.ASGITransport(app=self.app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://testserver", timeout=None
            ) as client:
                return await client.request(method, path, **kwargs)

        return asyncio.run(go())

    def get(self, path, **kwargs):
        return self.request("GET", path, **kwargs)

    def post(self, path, **kwargs):
        return self.request("POST", path, **kwargs)


@pytest.fixture(scope="session")
def client():
    return ServiceClient()
