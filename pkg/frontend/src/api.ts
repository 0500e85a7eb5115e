// Thin typed client over the review service JSON API.
// The service base URL is a single runtime config value: set
// `globalThis.NEOLEX_API_BASE` before loading the app (empty = same origin).

import type { CandidateDetail, CandidatePage, DecisionBody, Meta, Report, Status } from "./types.js";

export function apiBase(): string {
  const value = (globalThis as Record<string, unknown>)["NEOLEX_API_BASE"];
  return typeof value === "string" ? value.replace(/\/$/, "") : "";
}

export class ApiError extends Error {
  readonly status: number;
  readonly detail: string;

  constructor(status: number, detail: string) {
    super(`API ${status}: ${detail}`);
    this.status = status;
    this.detail = detail;
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  let response: Response;
  try {
    response = await fetch(apiBase() + path, init);
  } catch (err) {
    throw new ApiError(0, err instanceof Error ? err.message : "network failure");
  }
  const text = await response.text();
  if (!response.ok) {
    let detail = text;
    try {
      const body = JSON.parse(text) as { detail?: unknown };
      if (typeof body.detail === "string") detail = body.detail;
    } catch {
      // raw body is the detail
    }
    throw new ApiError(response.status, detail);
  }
  return JSON.parse(text) as T;
}

export interface QueueQuery {
  status?: Status;
  sort?: "freq" | "lemma";
  offset?: number;
  limit?: number;
}

export function listCandidates(query: QueueQuery): Promise<CandidatePage> {
  const params = new URLSearchParams();
  if (query.status) params.set("status", query.status);
  if (query.sort) params.set("sort", query.sort);
  params.set("offset", String(query.offset ?? 0));
  params.set("limit", String(query.limit ?? 50));
  return request<CandidatePage>(`/api/candidates?${params.toString()}`);
}

export function getCandidate(lemma: string): Promise<CandidateDetail> {
  return request<CandidateDetail>(`/api/candidates/${encodeURIComponent(lemma)}`);
}

export function postDecision(lemma: string, body: DecisionBody): Promise<{ ok: boolean; candidate: CandidateDetail }> {
  return request(`/api/candidates/${encodeURIComponent(lemma)}/decision`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
}

export function getReport(): Promise<Report> {
  return request<Report>("/api/report");
}

export function getMeta(): Promise<Meta> {
  return request<Meta>("/api/meta");
}

export function getExport(format: "tsv" | "json"): Promise<string> {
  return fetch(`${apiBase()}/api/export?format=${format}`).then(async (r) => {
    if (!r.ok) throw new ApiError(r.status, await r.text());
    return r.text();
  });
}
