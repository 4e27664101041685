/**
 * Typed client for the picker service HTTP API.  The service hosts one
 * document per process, so the client carries no document identity.
 */
export class ApiError extends Error {
    constructor(status, message) {
        super(message);
        this.status = status;
    }
}
async function detail(resp) {
    try {
        const body = (await resp.json());
        return body.detail ?? resp.statusText;
    }
    catch {
        return resp.statusText;
    }
}
export class PickerApi {
    constructor(base = "") {
        this.base = base;
    }
    async docInfo() {
        const resp = await fetch(`${this.base}/api/doc`);
        if (!resp.ok) {
            throw new ApiError(resp.status, await detail(resp));
        }
        return (await resp.json());
    }
    pageImageUrl(page, dpi) {
        return `${this.base}/api/pages/${page}/image?dpi=${dpi}`;
    }
    async extract(req, signal) {
        const resp = await fetch(`${this.base}/api/extract`, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(req),
            signal,
        });
        if (!resp.ok) {
            throw new ApiError(resp.status, await detail(resp));
        }
        return (await resp.json());
    }
}
