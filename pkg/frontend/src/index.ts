export { StepgainClient, type ClientOptions } from "./client.js";
export { HttpError, requestJson, type HttpOptions } from "./http.js";
export {
  bandSeries,
  bestOperatingPoint,
  gainSeries,
  mostInformativeStep,
  rocPoints,
  totalGain,
  type BandPoint,
  type GainPoint,
  type RocPoint,
} from "./analysis.js";
export type * from "./types.js";
