// (a, b, re z, im z, re E, im E) from an arbitrary-precision series oracle.
pub const MLF_ORACLE: &[(f64, f64, f64, f64, f64, f64)] = &[
    (5.99999999999999978e-01, 5.99999999999999978e-01, -2.99999999999999989e-01, 0.00000000000000000e+00, 4.23141190841616666e-01, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 5.99999999999999978e-01, -2.50000000000000000e+00, 0.00000000000000000e+00, 4.41894204774978192e-02, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 5.99999999999999978e-01, -9.00000000000000000e+00, 0.00000000000000000e+00, 3.56005319175290271e-03, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 5.99999999999999978e-01, -3.00000000000000000e+01, 0.00000000000000000e+00, 3.07760271171074603e-04, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 5.99999999999999978e-01, -7.50000000000000000e+01, 0.00000000000000000e+00, 4.85662608501721260e-05, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 5.99999999999999978e-01, -1.00000000000000000e+02, 0.00000000000000000e+00, 2.72523699487794583e-05, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 5.99999999999999978e-01, -1.49999999999999933e+00, 2.59807621135331601e+00, -1.98339677377258501e-02, 3.42214972386087890e-02),
    (5.99999999999999978e-01, 5.99999999999999978e-01, -1.03923048454132640e+01, 5.99999999999999911e+00, 9.49815984039993383e-04, 1.73109022677405831e-03),
    (5.99999999999999978e-01, 5.99999999999999978e-01, -1.94191633029918123e+01, 4.78498658427964862e+00, 6.16897020181594175e-04, 3.29390893471048600e-04),
    (5.99999999999999978e-01, 5.99999999999999978e-01, -2.64825502764905636e+01, 3.63823381718815568e+01, -4.31403301786697821e-05, 1.27867076289769736e-04),
    (5.99999999999999978e-01, 5.99999999999999978e-01, -8.73862348634631445e+01, 2.15324396292584197e+01, 2.97803091689235822e-05, 1.56985003932984095e-05),
    (5.99999999999999978e-01, 5.99999999999999978e-01, 7.07106781186547573e-01, 7.07106781186547462e-01, 2.49076940580159528e-01, 2.06362935812101966e+00),
    (5.99999999999999978e-01, 5.99999999999999978e-01, 4.94974746830583268e+00, 4.94974746830583179e+00, 4.57741663931222229e+03, 6.13258226514778926e+02),
    (5.99999999999999978e-01, 1.99999999999999956e-01, -2.99999999999999989e-01, 0.00000000000000000e+00, 3.93787250693632823e-02, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.99999999999999956e-01, -2.50000000000000000e+00, 0.00000000000000000e+00, -8.15102675742735289e-02, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.99999999999999956e-01, -9.00000000000000000e+00, 0.00000000000000000e+00, -2.92020361649978841e-02, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.99999999999999956e-01, -3.00000000000000000e+01, 0.00000000000000000e+00, -8.93685075018440384e-03, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.99999999999999956e-01, -7.50000000000000000e+01, 0.00000000000000000e+00, -3.58032003140546385e-03, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.99999999999999956e-01, -1.00000000000000000e+02, 0.00000000000000000e+00, -2.68558265424321358e-03, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.99999999999999956e-01, -1.49999999999999933e+00, 2.59807621135331601e+00, -6.86143808987171450e-02, -7.44362932903077507e-02),
    (5.99999999999999978e-01, 1.99999999999999956e-01, -1.03923048454132640e+01, 5.99999999999999911e+00, -1.93915529515645106e-02, -1.09241575572767390e-02),
    (5.99999999999999978e-01, 1.99999999999999956e-01, -1.94191633029918123e+01, 4.78498658427964862e+00, -1.29980564383098528e-02, -3.17524753411177431e-03),
    (5.99999999999999978e-01, 1.99999999999999956e-01, -2.64825502764905636e+01, 3.63823381718815568e+01, -3.51732682972920188e-03, -4.82444100565301934e-03),
    (5.99999999999999978e-01, 1.99999999999999956e-01, -8.73862348634631445e+01, 2.15324396292584197e+01, -2.89734382996014892e-03, -7.13632485647012582e-04),
    (5.99999999999999978e-01, 1.99999999999999956e-01, 7.07106781186547573e-01, 7.07106781186547462e-01, -7.52401970153646515e-01, 1.88562738810258024e+00),
    (5.99999999999999978e-01, 1.99999999999999956e-01, 4.94974746830583268e+00, 4.94974746830583179e+00, 1.33840372493825125e+04, 1.03185193169927988e+04),
    (5.99999999999999978e-01, 1.19999999999999996e+00, -2.99999999999999989e-01, 0.00000000000000000e+00, 8.27879272001522226e-01, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.19999999999999996e+00, -2.50000000000000000e+00, 0.00000000000000000e+00, 2.50926220785830212e-01, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.19999999999999996e+00, -9.00000000000000000e+00, 0.00000000000000000e+00, 7.42161021389244890e-02, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.19999999999999996e+00, -3.00000000000000000e+01, 0.00000000000000000e+00, 2.23732404056967427e-02, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.19999999999999996e+00, -7.50000000000000000e+01, 0.00000000000000000e+00, 8.95275208241630774e-03, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.19999999999999996e+00, -1.00000000000000000e+02, 0.00000000000000000e+00, 6.71477720072124508e-03, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.19999999999999996e+00, -1.49999999999999933e+00, 2.59807621135331601e+00, 1.25102052018024573e-01, 1.93868778733937402e-01),
    (5.99999999999999978e-01, 1.19999999999999996e+00, -1.03923048454132640e+01, 5.99999999999999911e+00, 4.84652787703910640e-02, 2.78148675096989428e-02),
    (5.99999999999999978e-01, 1.19999999999999996e+00, -1.94191633029918123e+01, 4.78498658427964862e+00, 3.25741530641346089e-02, 8.00948486224027818e-03),
    (5.99999999999999978e-01, 1.19999999999999996e+00, -2.64825502764905636e+01, 3.63823381718815568e+01, 8.78467099396747567e-03, 1.20637552055764784e-02),
    (5.99999999999999978e-01, 1.19999999999999996e+00, -8.73862348634631445e+01, 2.15324396292584197e+01, 7.24420084836135958e-03, 1.78483051904988754e-03),
    (5.99999999999999978e-01, 1.19999999999999996e+00, 7.07106781186547573e-01, 7.07106781186547462e-01, 1.16050458709016913e+00, 1.75790803887586167e+00),
    (5.99999999999999978e-01, 1.19999999999999996e+00, 4.94974746830583268e+00, 4.94974746830583179e+00, 5.24269510120175937e+02, -4.00372638523879857e+02),
    (5.99999999999999978e-01, 1.00000000000000000e+00, -2.99999999999999989e-01, 0.00000000000000000e+00, 7.32187255097104917e-01, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.00000000000000000e+00, -2.50000000000000000e+00, 0.00000000000000000e+00, 1.90916707401169783e-01, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.00000000000000000e+00, -9.00000000000000000e+00, 0.00000000000000000e+00, 5.19183673832066886e-02, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.00000000000000000e+00, -3.00000000000000000e+01, 0.00000000000000000e+00, 1.52114314828014560e-02, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.00000000000000000e+00, -7.50000000000000000e+01, 0.00000000000000000e+00, 6.04110436659538886e-03, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.00000000000000000e+00, -1.00000000000000000e+02, 0.00000000000000000e+00, 4.52524271313281112e-03, 0.00000000000000000e+00),
    (5.99999999999999978e-01, 1.00000000000000000e+00, -1.49999999999999933e+00, 2.59807621135331601e+00, 7.67857789969273868e-02, 1.49921263198033811e-01),
    (5.99999999999999978e-01, 1.00000000000000000e+00, -1.03923048454132640e+01, 5.99999999999999911e+00, 3.31405776219039772e-02, 1.97009212771347107e-02),
    (5.99999999999999978e-01, 1.00000000000000000e+00, -1.94191633029918123e+01, 4.78498658427964862e+00, 2.22492336413966443e-02, 5.57614481657838900e-03),
    (5.99999999999999978e-01, 1.00000000000000000e+00, -2.64825502764905636e+01, 3.63823381718815568e+01, 5.87160946901697529e-03, 8.17995740921039112e-03),
    (5.99999999999999978e-01, 1.00000000000000000e+00, -8.73862348634631445e+01, 2.15324396292584197e+01, 4.88228080561539657e-03, 1.20812787865769004e-03),
    (5.99999999999999978e-01, 1.00000000000000000e+00, 7.07106781186547573e-01, 7.07106781186547462e-01, 9.52165687078133871e-01, 1.91106717028879047e+00),
    (5.99999999999999978e-01, 1.00000000000000000e+00, 4.94974746830583268e+00, 4.94974746830583179e+00, 1.16705824454726189e+03, -4.80269778965606292e+02),
    (7.50000000000000000e-01, 7.50000000000000000e-01, -2.99999999999999989e-01, 0.00000000000000000e+00, 5.45111545390969510e-01, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 7.50000000000000000e-01, -2.50000000000000000e+00, 0.00000000000000000e+00, 5.52220343077754749e-02, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 7.50000000000000000e-01, -9.00000000000000000e+00, 0.00000000000000000e+00, 3.21062658819561489e-03, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 7.50000000000000000e-01, -3.00000000000000000e+01, 0.00000000000000000e+00, 2.46220749582616149e-04, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 7.50000000000000000e-01, -7.50000000000000000e+01, 0.00000000000000000e+00, 3.77965375704269159e-05, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 7.50000000000000000e-01, -1.00000000000000000e+02, 0.00000000000000000e+00, 2.11150508400557340e-05, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 7.50000000000000000e-01, -1.49999999999999933e+00, 2.59807621135331601e+00, -4.74137390277764650e-02, 3.47332773860155111e-02),
    (7.50000000000000000e-01, 7.50000000000000000e-01, -1.03923048454132640e+01, 5.99999999999999911e+00, 7.06148124222157492e-04, 1.51322075625092128e-03),
    (7.50000000000000000e-01, 7.50000000000000000e-01, -1.94191633029918123e+01, 4.78498658427964862e+00, 4.99581267327677491e-04, 2.78215826715222381e-04),
    (7.50000000000000000e-01, 7.50000000000000000e-01, -2.64825502764905636e+01, 3.63823381718815568e+01, -3.59216039935155928e-05, 9.85749684892736231e-05),
    (7.50000000000000000e-01, 7.50000000000000000e-01, -8.73862348634631445e+01, 2.15324396292584197e+01, 2.30543439662597580e-05, 1.22572406374660198e-05),
    (7.50000000000000000e-01, 7.50000000000000000e-01, 7.07106781186547573e-01, 7.07106781186547462e-01, 9.81952349936661362e-01, 1.93947859248768339e+00),
    (7.50000000000000000e-01, 7.50000000000000000e-01, 4.94974746830583268e+00, 4.94974746830583179e+00, 1.56660035743904950e+03, -1.34121673396015103e+03),
    (7.50000000000000000e-01, 5.00000000000000000e-01, -2.99999999999999989e-01, 0.00000000000000000e+00, 3.08595307599459912e-01, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 5.00000000000000000e-01, -2.50000000000000000e+00, 0.00000000000000000e+00, -4.30426747883117869e-02, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 5.00000000000000000e-01, -9.00000000000000000e+00, 0.00000000000000000e+00, -2.19848219786335924e-02, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 5.00000000000000000e-01, -3.00000000000000000e+01, 0.00000000000000000e+00, -6.78561834819170397e-03, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 5.00000000000000000e-01, -7.50000000000000000e+01, 0.00000000000000000e+00, -2.71927081929602488e-03, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 5.00000000000000000e-01, -1.00000000000000000e+02, 0.00000000000000000e+00, -2.03974957484031856e-03, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 5.00000000000000000e-01, -1.49999999999999933e+00, 2.59807621135331601e+00, -8.68305024567212758e-02, -6.32209454798767362e-02),
    (7.50000000000000000e-01, 5.00000000000000000e-01, -1.03923048454132640e+01, 5.99999999999999911e+00, -1.47547657853883164e-02, -8.24260775666376365e-03),
    (7.50000000000000000e-01, 5.00000000000000000e-01, -1.94191633029918123e+01, 4.78498658427964862e+00, -9.86652292317238659e-03, -2.40452197480391094e-03),
    (7.50000000000000000e-01, 5.00000000000000000e-01, -2.64825502764905636e+01, 3.63823381718815568e+01, -2.67201601297776007e-03, -3.66432688760066341e-03),
    (7.50000000000000000e-01, 5.00000000000000000e-01, -8.73862348634631445e+01, 2.15324396292584197e+01, -2.20058946249310260e-03, -5.41988223543047112e-04),
    (7.50000000000000000e-01, 5.00000000000000000e-01, 7.07106781186547573e-01, 7.07106781186547462e-01, 5.31442802329530339e-01, 2.08461927999469321e+00),
    (7.50000000000000000e-01, 5.00000000000000000e-01, 4.94974746830583268e+00, 4.94974746830583179e+00, 3.55874383896409927e+03, -1.70261818014046139e+03),
    (7.50000000000000000e-01, 1.50000000000000000e+00, -2.99999999999999989e-01, 0.00000000000000000e+00, 9.03124645690978278e-01, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 1.50000000000000000e+00, -2.50000000000000000e+00, 0.00000000000000000e+00, 3.04330761916195014e-01, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 1.50000000000000000e+00, -9.00000000000000000e+00, 0.00000000000000000e+00, 9.03153680566741585e-02, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 1.50000000000000000e+00, -3.00000000000000000e+01, 0.00000000000000000e+00, 2.71934239449560106e-02, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 1.50000000000000000e+00, -7.50000000000000000e+01, 0.00000000000000000e+00, 1.08801485674759005e-02, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 1.50000000000000000e+00, -1.00000000000000000e+02, 0.00000000000000000e+00, 8.16027824047422905e-03, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 1.50000000000000000e+00, -1.49999999999999933e+00, 2.59807621135331601e+00, 1.53937079878666866e-01, 2.43471325261296168e-01),
    (7.50000000000000000e-01, 1.50000000000000000e+00, -1.03923048454132640e+01, 5.99999999999999911e+00, 5.89053483461791996e-02, 3.38634089892144302e-02),
    (7.50000000000000000e-01, 1.50000000000000000e+00, -1.94191633029918123e+01, 4.78498658427964862e+00, 3.95965435509185032e-02, 9.74247504366611804e-03),
    (7.50000000000000000e-01, 1.50000000000000000e+00, -2.64825502764905636e+01, 3.63823381718815568e+01, 1.06743677734662534e-02, 1.46609703024510249e-02),
    (7.50000000000000000e-01, 1.50000000000000000e+00, -8.73862348634631445e+01, 2.15324396292584197e+01, 8.80366587013559597e-03, 2.16913049200925410e-03),
    (7.50000000000000000e-01, 1.50000000000000000e+00, 7.07106781186547573e-01, 7.07106781186547462e-01, 1.48872989153999069e+00, 1.25410703788837230e+00),
    (7.50000000000000000e-01, 1.50000000000000000e+00, 4.94974746830583268e+00, 4.94974746830583179e+00, 2.26847506845297495e+01, -2.93651450005700156e+02),
    (7.50000000000000000e-01, 1.00000000000000000e+00, -2.99999999999999989e-01, 0.00000000000000000e+00, 7.31908175110220438e-01, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 1.00000000000000000e+00, -2.50000000000000000e+00, 0.00000000000000000e+00, 1.56426958611947442e-01, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 1.00000000000000000e+00, -9.00000000000000000e+00, 0.00000000000000000e+00, 3.44536279569295015e-02, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 1.00000000000000000e+00, -3.00000000000000000e+01, 0.00000000000000000e+00, 9.51669269311712814e-03, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 1.00000000000000000e+00, -7.50000000000000000e+01, 0.00000000000000000e+00, 3.72829639606180692e-03, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 1.00000000000000000e+00, -1.00000000000000000e+02, 0.00000000000000000e+00, 2.78662101943909354e-03, 0.00000000000000000e+00),
    (7.50000000000000000e-01, 1.00000000000000000e+00, -1.49999999999999933e+00, 2.59807621135331601e+00, 1.81158120861223924e-02, 1.26864426433257960e-01),
    (7.50000000000000000e-01, 1.00000000000000000e+00, -1.03923048454132640e+01, 5.99999999999999911e+00, 2.08896794259015237e-02, 1.33345143787450288e-02),
    (7.50000000000000000e-01, 1.00000000000000000e+00, -1.94191633029918123e+01, 4.78498658427964862e+00, 1.40385223129957451e-02, 3.64786945188854588e-03),
    (7.50000000000000000e-01, 1.00000000000000000e+00, -2.64825502764905636e+01, 3.63823381718815568e+01, 3.56158985741833207e-03, 5.08890748666438342e-03),
    (7.50000000000000000e-01, 1.00000000000000000e+00, -8.73862348634631445e+01, 2.15324396292584197e+01, 3.00671772051943828e-03, 7.49620142615976099e-04),
    (7.50000000000000000e-01, 1.00000000000000000e+00, 7.07106781186547573e-01, 7.07106781186547462e-01, 1.28813371410756283e+00, 1.73375886016577341e+00),
    (7.50000000000000000e-01, 1.00000000000000000e+00, 4.94974746830583268e+00, 4.94974746830583179e+00, 6.09554181570027481e+02, -8.89177385488116101e+02),
    (9.00000000000000022e-01, 9.00000000000000022e-01, -2.99999999999999989e-01, 0.00000000000000000e+00, 6.65323036834055581e-01, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 9.00000000000000022e-01, -2.50000000000000000e+00, 0.00000000000000000e+00, 6.88730302465016542e-02, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 9.00000000000000022e-01, -9.00000000000000000e+00, 0.00000000000000000e+00, 1.88231673577857694e-03, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 9.00000000000000022e-01, -3.00000000000000000e+01, 0.00000000000000000e+00, 1.18250447943072854e-04, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 9.00000000000000022e-01, -7.50000000000000000e+01, 0.00000000000000000e+00, 1.75974517988745483e-05, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 9.00000000000000022e-01, -1.00000000000000000e+02, 0.00000000000000000e+00, 9.78506358890991686e-06, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 9.00000000000000022e-01, -1.49999999999999933e+00, 2.59807621135331601e+00, -1.21131473541216589e-01, 5.25600218805849576e-02),
    (9.00000000000000022e-01, 9.00000000000000022e-01, -1.03923048454132640e+01, 5.99999999999999911e+00, 2.80581573073166899e-04, 8.01127459156144098e-04),
    (9.00000000000000022e-01, 9.00000000000000022e-01, -1.94191633029918123e+01, 4.78498658427964862e+00, 2.43066214887578604e-04, 1.42911505822818514e-04),
    (9.00000000000000022e-01, 9.00000000000000022e-01, -2.64825502764905636e+01, 3.63823381718815568e+01, -1.78393216995182949e-05, 4.53523027701820358e-05),
    (9.00000000000000022e-01, 9.00000000000000022e-01, -8.73862348634631445e+01, 2.15324396292584197e+01, 1.06739191953663856e-05, 5.72562850763560340e-06),
    (9.00000000000000022e-01, 9.00000000000000022e-01, 7.07106781186547573e-01, 7.07106781186547462e-01, 1.40377021522464718e+00, 1.57535389428824812e+00),
    (9.00000000000000022e-01, 9.00000000000000022e-01, 4.94974746830583268e+00, 4.94974746830583179e+00, 3.29318980458154442e+02, 1.63434397440856998e+02),
    (9.00000000000000022e-01, 8.00000000000000044e-01, -2.99999999999999989e-01, 0.00000000000000000e+00, 5.84341430117870764e-01, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 8.00000000000000044e-01, -2.50000000000000000e+00, 0.00000000000000000e+00, 2.22882443790668114e-02, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 8.00000000000000044e-01, -9.00000000000000000e+00, 0.00000000000000000e+00, -9.88270790342034126e-03, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 8.00000000000000044e-01, -3.00000000000000000e+01, 0.00000000000000000e+00, -3.11132677861390879e-03, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 8.00000000000000044e-01, -7.50000000000000000e+01, 0.00000000000000000e+00, -1.24724935603442630e-03, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 8.00000000000000044e-01, -1.00000000000000000e+02, 0.00000000000000000e+00, -9.35589776798906791e-04, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 8.00000000000000044e-01, -1.49999999999999933e+00, 2.59807621135331601e+00, -1.51572991979836813e-01, -3.90895977669459323e-03),
    (9.00000000000000022e-01, 8.00000000000000044e-01, -1.03923048454132640e+01, 5.99999999999999911e+00, -6.79739303707963590e-03, -3.75369603678193248e-03),
    (9.00000000000000022e-01, 8.00000000000000044e-01, -1.94191633029918123e+01, 4.78498658427964862e+00, -4.52261252917380077e-03, -1.09846700288280586e-03),
    (9.00000000000000022e-01, 8.00000000000000044e-01, -2.64825502764905636e+01, 3.63823381718815568e+01, -1.22583904317117936e-03, -1.68080847818056199e-03),
    (9.00000000000000022e-01, 8.00000000000000044e-01, -8.73862348634631445e+01, 2.15324396292584197e+01, -1.00936532785380218e-03, -2.48585334963028512e-04),
    (9.00000000000000022e-01, 8.00000000000000044e-01, 7.07106781186547573e-01, 7.07106781186547462e-01, 1.30817851410199260e+00, 1.66519782317494092e+00),
    (9.00000000000000022e-01, 8.00000000000000044e-01, 4.94974746830583268e+00, 4.94974746830583179e+00, 3.89576399295067517e+02, 2.37732075795891916e+02),
    (9.00000000000000022e-01, 1.80000000000000004e+00, -2.99999999999999989e-01, 0.00000000000000000e+00, 9.01518946929390608e-01, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 1.80000000000000004e+00, -2.50000000000000000e+00, 0.00000000000000000e+00, 3.46762276266548430e-01, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 1.80000000000000004e+00, -9.00000000000000000e+00, 0.00000000000000000e+00, 1.03766267130788251e-01, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 1.80000000000000004e+00, -3.00000000000000000e+01, 0.00000000000000000e+00, 3.11886823488309907e-02, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 1.80000000000000004e+00, -7.50000000000000000e+01, 0.00000000000000000e+00, 1.24768149794809852e-02, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 1.80000000000000004e+00, -1.00000000000000000e+02, 0.00000000000000000e+00, 9.35768935849283848e-03, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 1.80000000000000004e+00, -1.49999999999999933e+00, 2.59807621135331601e+00, 1.91324470466365693e-01, 2.96343688991900001e-01),
    (9.00000000000000022e-01, 1.80000000000000004e+00, -1.03923048454132640e+01, 5.99999999999999911e+00, 6.75471431325765925e-02, 3.89212727448834395e-02),
    (9.00000000000000022e-01, 1.80000000000000004e+00, -1.94191633029918123e+01, 4.78498658427964862e+00, 4.54200087099740774e-02, 1.11843758374392151e-02),
    (9.00000000000000022e-01, 1.80000000000000004e+00, -2.64825502764905636e+01, 3.63823381718815568e+01, 1.22389775198988877e-02, 1.68124769727898624e-02),
    (9.00000000000000022e-01, 1.80000000000000004e+00, -8.73862348634631445e+01, 2.15324396292584197e+01, 1.00954777307486285e-02, 2.48751464663739567e-03),
    (9.00000000000000022e-01, 1.80000000000000004e+00, 7.07106781186547573e-01, 7.07106781186547462e-01, 1.44486338058533703e+00, 7.83023462254374580e-01),
    (9.00000000000000022e-01, 1.80000000000000004e+00, 4.94974746830583268e+00, 4.94974746830583179e+00, 4.96810799265315524e+01, -1.66623454380837472e+01),
    (9.00000000000000022e-01, 1.00000000000000000e+00, -2.99999999999999989e-01, 0.00000000000000000e+00, 7.35845276648430580e-01, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 1.00000000000000000e+00, -2.50000000000000000e+00, 0.00000000000000000e+00, 1.14699867545577858e-01, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 1.00000000000000000e+00, -9.00000000000000000e+00, 0.00000000000000000e+00, 1.46463079966371937e-02, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 1.00000000000000000e+00, -3.00000000000000000e+01, 0.00000000000000000e+00, 3.71370769845985301e-03, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 1.00000000000000000e+00, -7.50000000000000000e+01, 0.00000000000000000e+00, 1.43347564787859325e-03, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 1.00000000000000000e+00, -1.00000000000000000e+02, 0.00000000000000000e+00, 1.06897241828708927e-03, 0.00000000000000000e+00),
    (9.00000000000000022e-01, 1.00000000000000000e+00, -1.49999999999999933e+00, 2.59807621135331601e+00, -8.55178232738122018e-02, 1.04112911319062779e-01),
    (9.00000000000000022e-01, 1.00000000000000000e+00, -1.03923048454132640e+01, 5.99999999999999911e+00, 8.14469198112102027e-03, 5.71095359066345256e-03),
    (9.00000000000000022e-01, 1.00000000000000000e+00, -1.94191633029918123e+01, 4.78498658427964862e+00, 5.53047662467433167e-03, 1.49991416376777298e-03),
    (9.00000000000000022e-01, 1.00000000000000000e+00, -2.64825502764905636e+01, 3.63823381718815568e+01, 1.34383968967214783e-03, 1.97160232651399881e-03),
    (9.00000000000000022e-01, 1.00000000000000000e+00, -8.73862348634631445e+01, 2.15324396292584197e+01, 1.15348033843300766e-03, 2.89798200641096368e-04),
    (9.00000000000000022e-01, 1.00000000000000000e+00, 7.07106781186547573e-01, 7.07106781186547462e-01, 1.47813558563108627e+00, 1.48304430814710653e+00),
    (9.00000000000000022e-01, 1.00000000000000000e+00, 4.94974746830583268e+00, 4.94974746830583179e+00, 2.75742463426596032e+02, 1.08043505750686336e+02),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -2.99999999999999989e-01, 0.00000000000000000e+00, 7.40818220681717876e-01, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -2.50000000000000000e+00, 0.00000000000000000e+00, 8.20849986238988000e-02, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -9.00000000000000000e+00, 0.00000000000000000e+00, 1.23409804086679561e-04, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -3.00000000000000000e+01, 0.00000000000000000e+00, 9.35762296884017482e-14, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -7.50000000000000000e+01, 0.00000000000000000e+00, 2.67863696180807782e-33, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -1.00000000000000000e+02, 0.00000000000000000e+00, 3.72007597602083612e-44, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -1.49999999999999933e+00, 2.59807621135331601e+00, -1.90976089417432493e-01, 1.15391514587030369e-01),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -1.03923048454132640e+01, 5.99999999999999911e+00, 2.94460885379150457e-05, -8.56899407659680220e-06),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -1.94191633029918123e+01, 4.78498658427964862e+00, 2.67242341993886328e-10, -3.67467616303536886e-09),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -2.64825502764905636e+01, 3.63823381718815568e+01, 7.92439756138573929e-13, -3.05217365711608658e-12),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -8.73862348634631445e+01, 2.15324396292584197e+01, -1.00288516129938682e-38, 4.95266640918325370e-39),
    (1.00000000000000000e+00, 1.00000000000000000e+00, 7.07106781186547573e-01, 7.07106781186547462e-01, 1.54186345704563199e+00, 1.31753840877988093e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, 4.94974746830583268e+00, 4.94974746830583179e+00, 3.31869343817706195e+01, -1.37182120794684948e+02),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -2.99999999999999989e-01, 0.00000000000000000e+00, 7.40818220681717876e-01, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -2.50000000000000000e+00, 0.00000000000000000e+00, 8.20849986238988000e-02, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -9.00000000000000000e+00, 0.00000000000000000e+00, 1.23409804086679561e-04, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -3.00000000000000000e+01, 0.00000000000000000e+00, 9.35762296884017482e-14, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -7.50000000000000000e+01, 0.00000000000000000e+00, 2.67863696180807782e-33, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -1.00000000000000000e+02, 0.00000000000000000e+00, 3.72007597602083612e-44, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -1.49999999999999933e+00, 2.59807621135331601e+00, -1.90976089417432493e-01, 1.15391514587030369e-01),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -1.03923048454132640e+01, 5.99999999999999911e+00, 2.94460885379150457e-05, -8.56899407659680220e-06),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -1.94191633029918123e+01, 4.78498658427964862e+00, 2.67242341993886328e-10, -3.67467616303536886e-09),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -2.64825502764905636e+01, 3.63823381718815568e+01, 7.92439756138573929e-13, -3.05217365711608658e-12),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -8.73862348634631445e+01, 2.15324396292584197e+01, -1.00288516129938682e-38, 4.95266640918325370e-39),
    (1.00000000000000000e+00, 1.00000000000000000e+00, 7.07106781186547573e-01, 7.07106781186547462e-01, 1.54186345704563199e+00, 1.31753840877988093e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, 4.94974746830583268e+00, 4.94974746830583179e+00, 3.31869343817706195e+01, -1.37182120794684948e+02),
    (1.00000000000000000e+00, 2.00000000000000000e+00, -2.99999999999999989e-01, 0.00000000000000000e+00, 8.63939264394273820e-01, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 2.00000000000000000e+00, -2.50000000000000000e+00, 0.00000000000000000e+00, 3.67166000550440463e-01, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 2.00000000000000000e+00, -9.00000000000000000e+00, 0.00000000000000000e+00, 1.11097398910657036e-01, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 2.00000000000000000e+00, -3.00000000000000000e+01, 0.00000000000000000e+00, 3.33333333333302173e-02, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 2.00000000000000000e+00, -7.50000000000000000e+01, 0.00000000000000000e+00, 1.33333333333333342e-02, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 2.00000000000000000e+00, -1.00000000000000000e+02, 0.00000000000000000e+00, 1.00000000000000002e-02, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 2.00000000000000000e+00, -1.49999999999999933e+00, 2.59807621135331601e+00, 2.31806675907415688e-01, 3.24573263813942914e-01),
    (1.00000000000000000e+00, 2.00000000000000000e+00, -1.03923048454132640e+01, 5.99999999999999911e+00, 7.21663015188903773e-02, 4.16660581601905194e-02),
    (1.00000000000000000e+00, 2.00000000000000000e+00, -1.94191633029918123e+01, 4.78498658427964862e+00, 4.85479082005472740e-02, 1.19624666359000823e-02),
    (1.00000000000000000e+00, 2.00000000000000000e+00, -2.64825502764905636e+01, 3.63823381718815568e+01, 1.30778026056091509e-02, 1.79665867515721236e-02),
    (1.00000000000000000e+00, 2.00000000000000000e+00, -8.73862348634631445e+01, 2.15324396292584197e+01, 1.07884240572176729e-02, 2.65832588015536050e-03),
    (1.00000000000000000e+00, 2.00000000000000000e+00, 7.07106781186547573e-01, 7.07106781186547462e-01, 1.31479566827613903e+00, 5.48485018367835586e-01),
    (1.00000000000000000e+00, 2.00000000000000000e+00, 4.94974746830583268e+00, 4.94974746830583179e+00, -1.06061154720739115e+01, -1.71088582054900407e+01),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -2.99999999999999989e-01, 0.00000000000000000e+00, 7.40818220681717876e-01, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -2.50000000000000000e+00, 0.00000000000000000e+00, 8.20849986238988000e-02, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -9.00000000000000000e+00, 0.00000000000000000e+00, 1.23409804086679561e-04, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -3.00000000000000000e+01, 0.00000000000000000e+00, 9.35762296884017482e-14, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -7.50000000000000000e+01, 0.00000000000000000e+00, 2.67863696180807782e-33, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -1.00000000000000000e+02, 0.00000000000000000e+00, 3.72007597602083612e-44, 0.00000000000000000e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -1.49999999999999933e+00, 2.59807621135331601e+00, -1.90976089417432493e-01, 1.15391514587030369e-01),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -1.03923048454132640e+01, 5.99999999999999911e+00, 2.94460885379150457e-05, -8.56899407659680220e-06),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -1.94191633029918123e+01, 4.78498658427964862e+00, 2.67242341993886328e-10, -3.67467616303536886e-09),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -2.64825502764905636e+01, 3.63823381718815568e+01, 7.92439756138573929e-13, -3.05217365711608658e-12),
    (1.00000000000000000e+00, 1.00000000000000000e+00, -8.73862348634631445e+01, 2.15324396292584197e+01, -1.00288516129938682e-38, 4.95266640918325370e-39),
    (1.00000000000000000e+00, 1.00000000000000000e+00, 7.07106781186547573e-01, 7.07106781186547462e-01, 1.54186345704563199e+00, 1.31753840877988093e+00),
    (1.00000000000000000e+00, 1.00000000000000000e+00, 4.94974746830583268e+00, 4.94974746830583179e+00, 3.31869343817706195e+01, -1.37182120794684948e+02),
];
