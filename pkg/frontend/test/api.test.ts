// @vitest-environment happy-dom
import { describe, expect, it } from "vitest";

import { ApiClient, ApiError, resolveBaseUrl, storeBaseUrl } from "../src/api";

function fakeFetch(status: number, payload: unknown): typeof fetch {
  return (async () =>
    ({
      ok: status >= 200 && status < 300,
      status,
      json: async () => payload,
    }) as unknown as Response) as typeof fetch;
}

describe("ApiClient", () => {
  it("returns parsed bodies on success", async () => {
    const client = new ApiClient("", fakeFetch(200, { catalog_version: "1" }));
    await expect(client.catalog()).resolves.toMatchObject({
      catalog_version: "1",
    });
  });

  it("raises ApiError carrying code, field, and status", async () => {
    const client = new ApiClient(
      "",
      fakeFetch(400, {
        error: {
          code: "VALIDATION",
          message: "size_kloc must be positive",
          field: "size_kloc",
        },
      }),
    );
    const err: unknown = await client
      .estimate({ model: "basic", mode: "organic", size_kloc: -1 })
      .catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    const apiErr = err as ApiError;
    expect(apiErr.code).toBe("VALIDATION");
    expect(apiErr.field).toBe("size_kloc");
    expect(apiErr.status).toBe(400);
    expect(apiErr.message).toContain("size_kloc");
  });

  it("wraps non-service error bodies as INTERNAL", async () => {
    const client = new ApiClient("", fakeFetch(502, "bad gateway"));
    const err: unknown = await client.catalog().catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).code).toBe("INTERNAL");
    expect((err as ApiError).status).toBe(502);
  });

  it("maps network failures to UNREACHABLE with status 0", async () => {
    const failing = (async () => {
      throw new Error("ECONNREFUSED");
    }) as unknown as typeof fetch;
    const client = new ApiClient("http://localhost:9", failing);
    const err: unknown = await client.catalog().catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).code).toBe("UNREACHABLE");
    expect((err as ApiError).status).toBe(0);
  });

  it("treats 204 responses as empty", async () => {
    const client = new ApiClient("", fakeFetch(204, null));
    await expect(client.deleteScenario("abc")).resolves.toBeUndefined();
  });

  it("prefixes every path with the base url", async () => {
    const seen: string[] = [];
    const recording = (async (input: RequestInfo | URL) => {
      seen.push(String(input));
      return {
        ok: true,
        status: 200,
        json: async () => [],
      } as unknown as Response;
    }) as typeof fetch;
    const client = new ApiClient("http://localhost:8000/", recording);
    await client.listScenarios();
    expect(seen).toEqual(["http://localhost:8000/api/v1/scenarios"]);
  });
});

describe("resolveBaseUrl", () => {
  it("prefers the runtime setting over the build default", () => {
    window.localStorage.removeItem("cocoest.base_url");
    window.__COCOEST_BASE__ = "http://build.example:9000/";
    expect(resolveBaseUrl()).toBe("http://build.example:9000");

    storeBaseUrl("http://runtime.example:7000/");
    expect(resolveBaseUrl()).toBe("http://runtime.example:7000");

    storeBaseUrl("");
    delete window.__COCOEST_BASE__;
    expect(resolveBaseUrl()).toBe("");
  });
});
