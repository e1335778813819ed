pub struct MarketParams;
