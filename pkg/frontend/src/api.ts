/**
 * Typed client for the picker service HTTP API.  The service hosts one
 * document per process, so the client carries no document identity.
 */

export interface DocInfo {
  n_pages: number;
  dims: [number, number][];
}

export interface ExtractRequest {
  page: number;
  area: [number, number, number, number];
  method?: string;
  col_names?: boolean;
}

export type CellValue = string | number | boolean | null;

export interface ExtractResponse {
  page: number;
  method: string;
  names: string[];
  types: string[];
  records: Record<string, CellValue>[];
  n_tables: number;
}

export class ApiError extends Error {
  status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

async function detail(resp: Response): Promise<string> {
  try {
    const body = (await resp.json()) as { detail?: string };
    return body.detail ?? resp.statusText;
  } catch {
    return resp.statusText;
  }
}

export class PickerApi {
  constructor(private base: string = "") {}

  async docInfo(): Promise<DocInfo> {
    const resp = await fetch(`${this.base}/api/doc`);
    if (!resp.ok) {
      throw new ApiError(resp.status, await detail(resp));
    }
    return (await resp.json()) as DocInfo;
  }

  pageImageUrl(page: number, dpi: number): string {
    return `${this.base}/api/pages/${page}/image?dpi=${dpi}`;
  }

  async extract(req: ExtractRequest, signal?: AbortSignal): Promise<ExtractResponse> {
    const resp = await fetch(`${this.base}/api/extract`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(req),
      signal,
    });
    if (!resp.ok) {
      throw new ApiError(resp.status, await detail(resp));
    }
    return (await resp.json()) as ExtractResponse;
  }
}
