import { defineConfig } from "vitest/config";

const ENGINE = "http://127.0.0.1:8000";

export default defineConfig({
  server: {
    proxy: {
      "/api": ENGINE,
      "/health": ENGINE,
    },
  },
  test: {
    environment: "node",
    testTimeout: 15000,
    hookTimeout: 30000,
  },
});
