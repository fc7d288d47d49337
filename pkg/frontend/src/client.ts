import { requestJson, type HttpOptions } from "./http.js";
import type {
  AdvantageRequest,
  AdvantageResponse,
  AucRequest,
  AucResponse,
  HealthResponse,
  ParseRequest,
  ParseResponse,
  ProfileRequest,
  ProfileResponse,
  ScoreRequest,
  ScoreResponse,
  ShapeRequest,
  ShapeResponse,
} from "./types.js";

export interface ClientOptions extends HttpOptions {
  baseUrl: string;
}

/** Typed client for every stepgain service endpoint. */
export class StepgainClient {
  private readonly baseUrl: string;
  private readonly http: HttpOptions;

  constructor(opts: ClientOptions) {
    const { baseUrl, ...http } = opts;
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    this.http = http;
  }

  private get<T>(path: string): Promise<T> {
    return requestJson<T>("GET", this.baseUrl + path, undefined, this.http);
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return requestJson<T>("POST", this.baseUrl + path, body, this.http);
  }

  health(): Promise<HealthResponse> {
    return this.get("/health");
  }

  parse(req: ParseRequest): Promise<ParseResponse> {
    return this.post("/v1/parse", req);
  }

  score(req: ScoreRequest): Promise<ScoreResponse> {
    return this.post("/v1/score", req);
  }

  advantages(req: AdvantageRequest): Promise<AdvantageResponse> {
    return this.post("/v1/rewards/advantages", req);
  }

  shape(req: ShapeRequest): Promise<ShapeResponse> {
    return this.post("/v1/rewards/shape", req);
  }

  auc(req: AucRequest): Promise<AucResponse> {
    return this.post("/v1/eval/auc", req);
  }

  aggregateProfiles(req: ProfileRequest): Promise<ProfileResponse> {
    return this.post("/v1/profiles/aggregate", req);
  }
}
