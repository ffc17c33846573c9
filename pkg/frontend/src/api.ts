export interface SummarizeRequest {
  text: string;
  function: string;
  alpha: number;
  r: number;
  budget: number;
}

export interface SummarizeResponse {
  summary: string;
  selectedIndices: number[];
  parameters: { function: string; alpha: number; r: number; budget: number };
  objectiveValue: number | null;
}

/** A non-2xx response; carries the offending field when the server names one. */
export class ApiError extends Error {
  constructor(message: string, readonly status: number, readonly field?: string) {
    super(message);
  }
}

export type PostSummarize = (
  baseUrl: string,
  request: SummarizeRequest,
) => Promise<SummarizeResponse>;

export const postSummarize: PostSummarize = async (baseUrl, request) => {
  const response = await fetch(`${baseUrl}/v1/summarize`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(request),
  });
  let payload: unknown = null;
  try {
    payload = await response.json();
  } catch {
    payload = null;
  }
  if (!response.ok) {
    const body = (payload ?? {}) as { error?: string; field?: string };
    throw new ApiError(body.error ?? `request failed (${response.status})`,
      response.status, body.field);
  }
  return payload as SummarizeResponse;
};
