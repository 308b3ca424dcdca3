/** Browser entry point. */

import { ApiClient, resolveBaseUrl } from "./api.js";
import { initApp } from "./app.js";

const root = document.getElementById("app");
if (root !== null) {
  void initApp(root, new ApiClient(resolveBaseUrl()));
}
